#pragma once

// One representative per Weyl orbit on R-subsets of coordinates. Ranks are
// scanned in ascending order; every unvisited rank becomes a representative
// and all of its Weyl images are marked visited, so each representative is
// the minimal-rank member of its orbit.

#include "gitstrat/combinadic.hpp"
#include "gitstrat/weyl_action.hpp"

#include <bit>
#include <cstdint>
#include <new>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitstrat {

/// Packed visited flags for ranks 1..size. Bits are only ever set.
class VisitedArray {
 public:
  explicit VisitedArray(std::int64_t size) : size_(size) {
    const auto words = static_cast<std::size_t>((size + 63) / 64);
    try {
      bits_.assign(words, 0);
    } catch (const std::bad_alloc&) {
      throw std::runtime_error("cannot allocate visited array: " + std::to_string(words * 8) + " bytes required");
    }
  }

  std::int64_t size() const { return size_; }
  std::size_t bytes() const { return bits_.size() * sizeof(std::uint64_t); }

  bool test(std::int64_t rank) const {
    const auto i = static_cast<std::uint64_t>(rank - 1);
    return (bits_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::int64_t rank) {
    const auto i = static_cast<std::uint64_t>(rank - 1);
    bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  /// Smallest unvisited rank >= from, or 0 if none.
  std::int64_t next_unvisited(std::int64_t from) const {
    if (from > size_) return 0;
    auto i = static_cast<std::uint64_t>(from - 1);
    std::size_t w = i >> 6;
    std::uint64_t free = ~bits_[w] & (~std::uint64_t{0} << (i & 63));
    while (free == 0) {
      if (++w == bits_.size()) return 0;
      free = ~bits_[w];
    }
    const auto rank = static_cast<std::int64_t>(w * 64 + std::countr_zero(free)) + 1;
    return rank <= size_ ? rank : 0;
  }

 private:
  std::int64_t size_;
  std::vector<std::uint64_t> bits_;
};

struct RepresentativeSet {
  int r = 0;
  std::vector<Combination> reps;
  std::vector<std::int64_t> ranks;  // strictly increasing, parallel to reps
  std::int64_t total = 0;            // C(N, R)
};

namespace detail {
inline void small_sort(int* v, int n) {
  for (int i = 1; i < n; ++i) {
    const int x = v[i];
    int j = i;
    for (; j > 0 && v[j - 1] > x; --j) v[j] = v[j - 1];
    v[j] = x;
  }
}
}  // namespace detail

inline RepresentativeSet sieve(const CaseDescriptor& c, int r, const InducedActionList& actions) {
  if (r < 1 || r > c.n()) throw std::out_of_range("sieve: R must lie in 1..N");
  if (actions.degree() != c.n()) throw std::invalid_argument("sieve: action list degree differs from dim V");
  const RankTables tables(c.n(), r);
  VisitedArray visited(tables.count());
  RepresentativeSet out;
  out.r = r;
  out.total = tables.count();
  std::vector<int> rep(static_cast<std::size_t>(r));
  std::vector<int> image(static_cast<std::size_t>(r));
  for (std::int64_t i = visited.next_unvisited(1); i != 0; i = visited.next_unvisited(i + 1)) {
    tables.unrank_into(i, rep.data());
    out.reps.emplace_back(c.n(), rep);
    out.ranks.push_back(i);
    visited.set(i);
    for (std::size_t j = 0; j < actions.size(); ++j) {
      const std::uint16_t* w = actions.element(j).data();
      for (int k = 0; k < r; ++k) image[k] = w[rep[k] - 1];
      detail::small_sort(image.data(), r);
      visited.set(tables.rank_sorted(image.data()));
    }
  }
  return out;
}

/// One representative per line, R space-separated indices.
inline void dump_representatives(std::ostream& os, const RepresentativeSet& set) {
  for (const auto& c : set.reps) {
    for (int k = 0; k < c.r(); ++k) os << (k ? " " : "") << c[k];
    os << '\n';
  }
}

}  // namespace gitstrat
