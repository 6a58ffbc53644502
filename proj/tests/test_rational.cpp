#include "gitstrat/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gitstrat;

namespace {

void expect_canonical(const Rational& x) {
  EXPECT_GT(x.denominator(), 0);
  EXPECT_EQ(boost::multiprecision::gcd(abs(x.numerator()), x.denominator()), 1) << x;
}

}  // namespace

TEST(Rational, ReducesByGcd) {
  const auto x = rat(2, 4);
  EXPECT_EQ(x.numerator(), 1);
  EXPECT_EQ(x.denominator(), 2);
}

TEST(Rational, SignLivesInNumerator) {
  const auto x = rat(3, -6);
  EXPECT_EQ(x.numerator(), -1);
  EXPECT_EQ(x.denominator(), 2);
  EXPECT_EQ(rat(-3, -6), rat(1, 2));
}

TEST(Rational, ZeroIsZeroOverOne) {
  const auto x = rat(0, 7);
  EXPECT_EQ(x.numerator(), 0);
  EXPECT_EQ(x.denominator(), 1);
  EXPECT_EQ(x.str(), "0/1");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(rat(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseAcceptsFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("-7/620"), rat(-7, 620));
  EXPECT_EQ(parse_rational("4/2"), Rational(2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(parse_rational("1/x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::domain_error);
}

TEST(Rational, ArithmeticChainsStayCanonical) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> small(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    Rational acc = rat(small(gen), 1 + std::abs(small(gen)));
    for (int step = 0; step < 30; ++step) {
      int d = small(gen);
      if (d == 0) d = 1;
      const Rational x = rat(small(gen), d);
      switch (step % 4) {
        case 0: acc += x; break;
        case 1: acc -= x; break;
        case 2: acc *= x; break;
        case 3:
          if (!x.is_zero()) acc /= x;
          break;
      }
      expect_canonical(acc);
    }
  }
}

TEST(Rational, Ordering) {
  EXPECT_LT(rat(1, 3), rat(1, 2));
  EXPECT_GT(rat(-1, 3), rat(-1, 2));
  EXPECT_EQ(rat(1, 2) <=> rat(2, 4), std::strong_ordering::equal);
}
