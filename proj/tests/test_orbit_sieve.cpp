#include "gitstrat/orbit_sieve.hpp"
#include "gitstrat/weyl_action.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

using namespace gitstrat;

namespace {

// Oracle: orbits computed by closure over the generators, no ranking involved.
std::vector<std::set<int>> orbit_minima(const CaseDescriptor& c, int r) {
  const auto list = weyl_list(c);
  std::vector<std::set<int>> all;
  std::vector<int> mask(static_cast<std::size_t>(c.n()), 0);
  std::fill(mask.end() - r, mask.end(), 1);
  std::set<std::set<int>> seen;
  std::vector<std::set<int>> minima;
  do {
    std::set<int> s;
    for (int i = 0; i < c.n(); ++i)
      if (mask[i]) s.insert(i + 1);
    if (seen.count(s)) continue;
    std::set<std::set<int>> orbit;
    for (std::size_t j = 0; j < list.size(); ++j) {
      std::set<int> img;
      for (int x : s) img.insert(list.element(j)[x - 1]);
      orbit.insert(img);
    }
    seen.insert(orbit.begin(), orbit.end());
    minima.push_back(*orbit.begin());
  } while (std::next_permutation(mask.begin(), mask.end()));
  std::sort(minima.begin(), minima.end());
  return minima;
}

}  // namespace

TEST(VisitedArray, Basics) {
  VisitedArray v(130);
  EXPECT_EQ(v.next_unvisited(1), 1);
  for (int i = 1; i <= 129; ++i) v.set(i);
  EXPECT_TRUE(v.test(64));
  EXPECT_FALSE(v.test(130));
  EXPECT_EQ(v.next_unvisited(1), 130);
  v.set(130);
  EXPECT_EQ(v.next_unvisited(1), 0);
  EXPECT_EQ(v.next_unvisited(131), 0);
}

TEST(VisitedArray, SkipsWordBoundaries) {
  VisitedArray v(200);
  for (int i = 1; i <= 200; ++i)
    if (i != 65 && i != 193) v.set(i);
  EXPECT_EQ(v.next_unvisited(1), 65);
  EXPECT_EQ(v.next_unvisited(66), 193);
  EXPECT_EQ(v.next_unvisited(194), 0);
}

TEST(Sieve, ToyMatchesOrbitOracle) {
  const auto c = parse_case_config(R"({"factors":[2,2],"slots":[[1,"standard"],[2,"standard"]]})");
  const auto list = weyl_list(c);
  for (int r = 1; r <= 4; ++r) {
    const auto reps = sieve(c, r, list);
    const auto want = orbit_minima(c, r);
    ASSERT_EQ(reps.reps.size(), want.size()) << r;
    for (std::size_t k = 0; k < want.size(); ++k)
      EXPECT_EQ(std::set<int>(reps.reps[k].indices().begin(), reps.reps[k].indices().end()), want[k]);
  }
}

TEST(Sieve, CaseOneMatchesOrbitOracle) {
  const auto c = builtin_case(1);
  const auto list = weyl_list(c);
  for (int r = 1; r <= 3; ++r) EXPECT_EQ(sieve(c, r, list).reps.size(), orbit_minima(c, r).size()) << r;
}

TEST(Sieve, RepresentativesAreOrbitMinima) {
  const auto c = builtin_case(2);
  const auto list = weyl_list(c);
  const RankTables t(c.n(), 3);
  const auto reps = sieve(c, 3, list);
  EXPECT_TRUE(std::is_sorted(reps.ranks.begin(), reps.ranks.end()));
  for (std::size_t k = 0; k < reps.reps.size(); ++k) {
    EXPECT_EQ(rank(reps.reps[k], t), reps.ranks[k]);
    for (std::size_t j = 0; j < list.size(); ++j) {
      std::vector<int> img;
      for (int x : reps.reps[k].indices()) img.push_back(list.element(j)[x - 1]);
      EXPECT_GE(rank(img, t), reps.ranks[k]);
    }
  }
}

TEST(Sieve, OrbitsPartitionAllSubsets) {
  // Orbit sizes of the representatives must add up to C(N, R).
  const auto c = builtin_case(1);
  const auto list = weyl_list(c);
  const RankTables t(c.n(), 4);
  const auto reps = sieve(c, 4, list);
  std::int64_t covered = 0;
  for (const auto& rep : reps.reps) {
    std::set<std::int64_t> orbit;
    for (std::size_t j = 0; j < list.size(); ++j) {
      std::vector<int> img;
      for (int x : rep.indices()) img.push_back(list.element(j)[x - 1]);
      orbit.insert(rank(img, t));
    }
    covered += static_cast<std::int64_t>(orbit.size());
  }
  EXPECT_EQ(covered, t.count());
  EXPECT_EQ(reps.total, t.count());
}

TEST(Sieve, KnownCounts) {
  const auto c = builtin_case(1);
  const auto list = weyl_list(c);
  const std::map<int, std::size_t> want{{1, 1}, {2, 7}, {3, 19}, {4, 65}, {5, 144}};
  for (auto [r, n] : want) EXPECT_EQ(sieve(c, r, list).reps.size(), n) << r;
}

TEST(Sieve, Errors) {
  const auto c = builtin_case(1);
  const auto list = weyl_list(c);
  EXPECT_THROW(sieve(c, 0, list), std::out_of_range);
  EXPECT_THROW(sieve(c, 19, list), std::out_of_range);
  EXPECT_THROW(sieve(c, 2, weyl_list(builtin_case(2))), std::invalid_argument);
}

TEST(Sieve, DumpFormat) {
  const auto c = builtin_case(1);
  const auto reps = sieve(c, 1, weyl_list(c));
  std::ostringstream os;
  dump_representatives(os, reps);
  EXPECT_EQ(os.str(), "1\n");
}
