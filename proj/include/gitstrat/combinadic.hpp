#pragma once

// Lexicographic ranking of R-subsets of {1..N}. Ranks and indices are 1-based
// at every public boundary.
//
// With a(i,j) = C(N-i, R-i+1) - C(N-j, R-i+1) the rank of c_1 < ... < c_R is
// 1 + sum_i a(i, c_i). Unranking peels indices off from the left: with
// m_1 = m and m_i = m - sum_{l<i} a(l, c_l), c_i is the smallest j with
// b(i,j) >= m_i where b(i,j) = C(N-i+1, R-i+1) - C(N-j, R-i+1).

#include "gitstrat/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitstrat {

/// Binomial coefficient C(n, m) for 0 <= m <= n+1, with C(n, n+1) = 0.
inline BigInt binom(int n, int m) {
  if (n < 0 || m < 0 || m > n + 1)
    throw std::out_of_range("binom(" + std::to_string(n) + ", " + std::to_string(m) + ") out of range");
  if (m == n + 1) return 0;
  m = std::min(m, n - m);
  BigInt out = 1;
  for (int k = 1; k <= m; ++k) out = out * (n - m + k) / k;
  return out;
}

/// Sorted R-subset of {1..N}.
class Combination {
 public:
  Combination() = default;
  Combination(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("empty combination");
    for (std::size_t k = 0; k < indices_.size(); ++k) {
      if (indices_[k] < 1 || indices_[k] > n_)
        throw std::out_of_range("combination index " + std::to_string(indices_[k]) + " outside 1.." +
                                std::to_string(n_));
      if (k && indices_[k - 1] >= indices_[k])
        throw std::invalid_argument("combination indices must be strictly increasing");
    }
  }

  /// Sorts first; rejects duplicates.
  static Combination from_unsorted(int n, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    return Combination(n, std::move(indices));
  }

  int n() const { return n_; }
  int r() const { return static_cast<int>(indices_.size()); }
  std::span<const int> indices() const { return indices_; }
  int operator[](std::size_t k) const { return indices_[k]; }

  friend bool operator==(const Combination&, const Combination&) = default;
  friend auto operator<=>(const Combination& a, const Combination& b) { return a.indices_ <=> b.indices_; }

  std::string str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < indices_.size(); ++k) out += (k ? "," : "") + std::to_string(indices_[k]);
    return out + ")";
  }

 private:
  int n_ = 0;
  std::vector<int> indices_;
};

/// Precomputed a(i,j), b(i,j) for one (N, R) context.
class RankTables {
 public:
  RankTables(int n, int r) : n_(n), r_(r) {
    if (r < 1 || r > n) throw std::out_of_range("rank tables need 1 <= R <= N");
    const BigInt total = binom(n, r);
    if (total > BigInt(std::numeric_limits<std::int64_t>::max()))
      throw std::overflow_error("C(N,R) exceeds 64-bit rank range");
    count_ = static_cast<std::int64_t>(total);
    a_.assign(static_cast<std::size_t>(r) * (n + 1), 0);
    b_.assign(a_.size(), 0);
    for (int i = 1; i <= r; ++i)
      for (int j = i; j <= n - r + i; ++j) {
        const BigInt tail = binom(n - j, r - i + 1);
        a_[slot(i, j)] = static_cast<std::int64_t>(binom(n - i, r - i + 1) - tail);
        b_[slot(i, j)] = static_cast<std::int64_t>(binom(n - i + 1, r - i + 1) - tail);
      }
  }

  int n() const { return n_; }
  int r() const { return r_; }
  /// C(N, R): the largest rank.
  std::int64_t count() const { return count_; }

  std::int64_t a(int i, int j) const { return a_[slot(i, j)]; }
  std::int64_t b(int i, int j) const { return b_[slot(i, j)]; }

  /// Rank of an already sorted, valid index sequence. No checks.
  std::int64_t rank_sorted(const int* sorted) const {
    std::int64_t m = 1;
    const std::int64_t* row = a_.data();
    for (int i = 0; i < r_; ++i, row += n_ + 1) m += row[sorted[i]];
    return m;
  }

  /// Writes the combination of rank m into out[0..R). No checks.
  void unrank_into(std::int64_t m, int* out) const {
    std::int64_t residual = m;
    for (int i = 1; i <= r_; ++i) {
      int j = i;
      while (b(i, j) < residual) ++j;
      out[i - 1] = j;
      residual -= a(i, j);
    }
  }

 private:
  std::size_t slot(int i, int j) const { return static_cast<std::size_t>(i - 1) * (n_ + 1) + j; }

  int n_;
  int r_;
  std::int64_t count_ = 0;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> b_;
};

inline RankTables build_rank_tables(int n, int r) { return RankTables(n, r); }

/// Lexicographic rank of a set of indices; sorts a copy first.
inline std::int64_t rank(std::span<const int> indices, const RankTables& t) {
  if (static_cast<int>(indices.size()) != t.r())
    throw std::invalid_argument("rank: expected " + std::to_string(t.r()) + " indices");
  std::vector<int> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 1 || sorted[k] > t.n())
      throw std::out_of_range("rank: index " + std::to_string(sorted[k]) + " outside 1.." + std::to_string(t.n()));
    if (k && sorted[k] == sorted[k - 1]) throw std::invalid_argument("rank: duplicate index");
  }
  return t.rank_sorted(sorted.data());
}

inline std::int64_t rank(const Combination& c, const RankTables& t) {
  if (c.n() != t.n()) throw std::invalid_argument("rank: combination context differs from tables");
  return rank(c.indices(), t);
}

inline Combination unrank(std::int64_t m, const RankTables& t) {
  if (m < 1 || m > t.count())
    throw std::out_of_range("unrank: " + std::to_string(m) + " outside 1.." + std::to_string(t.count()));
  std::vector<int> out(static_cast<std::size_t>(t.r()));
  t.unrank_into(m, out.data());
  return Combination(t.n(), std::move(out));
}

}  // namespace gitstrat
