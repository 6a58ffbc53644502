#include "gitstrat/weyl_action.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

using namespace gitstrat;

namespace {

std::vector<Permutation> random_element(const CaseDescriptor& c, std::mt19937& gen) {
  std::vector<Permutation> g;
  for (int n : c.factors()) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), gen);
    g.emplace_back(std::move(p));
  }
  return g;
}

// w acting on t*: within each block, coordinate i moves to position w(i).
RatVector act_on_torus(const CaseDescriptor& c, const std::vector<Permutation>& g, const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t f = 0; f < g.size(); ++f) {
    const Block blk = c.blocks()[f];
    for (int i = 1; i <= blk.size; ++i) out[blk.offset + g[f](i) - 1] = v[blk.offset + i - 1];
  }
  return out;
}

}  // namespace

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation({2, 1}));
}

TEST(Permutation, Compose) {
  const Permutation s({2, 3, 1}), t({1, 3, 2});
  // s(t(1)) = 2, s(t(2)) = s(3) = 1, s(t(3)) = s(2) = 3
  EXPECT_EQ(s.after(t), Permutation({2, 1, 3}));
  EXPECT_EQ(s.after(Permutation::identity(3)), s);
  EXPECT_THROW(s.after(Permutation::identity(2)), std::invalid_argument);
}

TEST(EnumerateSym, CountsAndOrder) {
  int fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    const auto all = enumerate_sym(n);
    EXPECT_EQ(static_cast<int>(all.size()), fact);
    EXPECT_EQ(all.front(), Permutation::identity(n));
    std::set<std::vector<int>> distinct;
    for (const auto& p : all) distinct.emplace(p.images().begin(), p.images().end());
    EXPECT_EQ(static_cast<int>(distinct.size()), fact);
    for (std::size_t k = 1; k < all.size(); ++k)
      EXPECT_TRUE(std::lexicographical_compare(all[k - 1].images().begin(), all[k - 1].images().end(),
                                               all[k].images().begin(), all[k].images().end()));
  }
  EXPECT_THROW(enumerate_sym(9), std::out_of_range);
  EXPECT_THROW(enumerate_sym(0), std::out_of_range);
}

TEST(InducedAction, CaseOneClosedForm) {
  // Coordinate 9(k-1) + 3(a-1) + b  maps to  9(s3(k)-1) + 3(s1(a)-1) + s2(b).
  const auto c = builtin_case(1);
  std::mt19937 gen(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_element(c, gen);
    const auto p = induced_action(c, g);
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int k = 1; k <= 2; ++k)
          EXPECT_EQ(p(9 * (k - 1) + 3 * (a - 1) + b), 9 * (g[2](k) - 1) + 3 * (g[0](a) - 1) + g[1](b));
  }
}

TEST(InducedAction, IdentityFixesEverything) {
  for (int id = 1; id <= 4; ++id) {
    const auto c = builtin_case(id);
    std::vector<Permutation> g;
    for (int n : c.factors()) g.push_back(Permutation::identity(n));
    EXPECT_EQ(induced_action(c, g), Permutation::identity(c.n()));
  }
}

TEST(InducedAction, Homomorphism) {
  std::mt19937 gen(17);
  for (int id = 1; id <= 4; ++id) {
    const auto c = builtin_case(id);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = random_element(c, gen), h = random_element(c, gen);
      std::vector<Permutation> gh;
      for (std::size_t f = 0; f < g.size(); ++f) gh.push_back(g[f].after(h[f]));
      EXPECT_EQ(induced_action(c, gh), induced_action(c, g).after(induced_action(c, h))) << "case " << id;
    }
  }
}

TEST(InducedAction, CompatibleWithWeights) {
  std::mt19937 gen(23);
  for (int id = 1; id <= 4; ++id) {
    const auto c = builtin_case(id);
    const auto gamma = weights(c);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = random_element(c, gen);
      const auto p = induced_action(c, g);
      for (int j = 1; j <= c.n(); ++j) ASSERT_EQ(gamma[p(j) - 1], act_on_torus(c, g, gamma[j - 1])) << "case " << id;
    }
  }
}

TEST(InducedAction, DegreeChecks) {
  const auto c = builtin_case(2);
  EXPECT_THROW(induced_action(c, std::vector<Permutation>{Permutation::identity(6)}), std::invalid_argument);
  EXPECT_THROW(induced_action(c, std::vector<Permutation>{Permutation::identity(6), Permutation::identity(3)}),
               std::invalid_argument);
}

TEST(WeylList, SizeAndOrder) {
  const auto c = builtin_case(1);
  const auto list = weyl_list(c);
  ASSERT_EQ(static_cast<std::int64_t>(list.size()), c.weyl_order());
  EXPECT_EQ(list.permutation(0), Permutation::identity(c.n()));
  // Second element changes only the last factor (GL2 swap).
  const std::vector<Permutation> g{Permutation::identity(3), Permutation::identity(3), Permutation({2, 1})};
  EXPECT_EQ(list.permutation(1), induced_action(c, g));
  std::set<std::vector<int>> distinct;
  for (std::size_t j = 0; j < list.size(); ++j) {
    auto e = list.element(j);
    distinct.emplace(e.begin(), e.end());
  }
  EXPECT_EQ(distinct.size(), list.size());
}

TEST(WeylList, Dump) {
  const auto list = weyl_list(parse_case_config(R"({"factors":[2],"slots":[[1,"standard"]]})"));
  std::ostringstream os;
  dump_actions(os, list);
  EXPECT_EQ(os.str(), "1 2\n2 1\n");
}
