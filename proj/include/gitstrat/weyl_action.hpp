#pragma once

// The Weyl group S_{n_1} x ... x S_{n_k} of a case, realized as permutations of
// the N coordinates of V.

#include "gitstrat/case_catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitstrat {

/// Bijection of {1..k}; image[i-1] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size() + 1, 0);
    for (int x : image_) {
      if (x < 1 || x > static_cast<int>(image_.size()) || seen[x])
        throw std::invalid_argument("not a permutation of 1.." + std::to_string(image_.size()));
      seen[x] = 1;
    }
  }

  static Permutation identity(int k) {
    std::vector<int> id(static_cast<std::size_t>(k));
    std::iota(id.begin(), id.end(), 1);
    return Permutation(std::move(id));
  }

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i - 1]; }
  std::span<const int> images() const { return image_; }

  /// (this o h)(i) = this(h(i))
  Permutation after(const Permutation& h) const {
    if (h.degree() != degree()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<int> out(image_.size());
    for (int i = 1; i <= degree(); ++i) out[i - 1] = (*this)(h(i));
    return Permutation(std::move(out));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// All n! permutations of 1..n in lexicographic order (identity first).
inline std::vector<Permutation> enumerate_sym(int n) {
  if (n < 1 || n > 8) throw std::out_of_range("enumerate_sym supports 1 <= n <= 8, got " + std::to_string(n));
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Coordinate permutation induced by one Weyl element, given as one
/// permutation per GL factor. Each slot's index set is mapped through its
/// factor's permutation, re-sorted and re-ranked.
inline Permutation induced_action(const CaseDescriptor& c, std::span<const Permutation> g) {
  if (g.size() != c.factors().size())
    throw std::invalid_argument("Weyl element needs one permutation per factor");
  for (std::size_t f = 0; f < g.size(); ++f)
    if (g[f].degree() != c.factors()[f])
      throw std::invalid_argument("permutation for factor " + std::to_string(f + 1) + " has degree " +
                                  std::to_string(g[f].degree()) + ", expected " + std::to_string(c.factors()[f]));
  std::vector<int> image(static_cast<std::size_t>(c.n()));
  int subset[3];
  for (int coord = 1; coord <= c.n(); ++coord) {
    auto ranks = c.decode(coord);
    for (std::size_t s = 0; s < c.slots().size(); ++s) {
      const auto& tables = c.slot_tables(static_cast<int>(s));
      const auto& perm = g[c.slots()[s].factor - 1];
      tables.unrank_into(ranks[s], subset);
      for (int k = 0; k < tables.r(); ++k) subset[k] = perm(subset[k]);
      std::sort(subset, subset + tables.r());
      ranks[s] = static_cast<int>(tables.rank_sorted(subset));
    }
    image[coord - 1] = c.encode(ranks);
  }
  return Permutation(std::move(image));
}

/// Induced coordinate permutations of every Weyl element, stored flat.
/// Entries are not required to be distinct.
class InducedActionList {
 public:
  InducedActionList(int degree, std::vector<std::uint16_t> images)
      : degree_(degree), images_(std::move(images)) {}

  int degree() const { return degree_; }
  std::size_t size() const { return degree_ ? images_.size() / degree_ : 0; }

  /// 0-based table of 1-based images for element j (0-based).
  std::span<const std::uint16_t> element(std::size_t j) const {
    return {images_.data() + j * degree_, static_cast<std::size_t>(degree_)};
  }

  Permutation permutation(std::size_t j) const {
    auto e = element(j);
    return Permutation(std::vector<int>(e.begin(), e.end()));
  }

 private:
  int degree_;
  std::vector<std::uint16_t> images_;
};

/// Every Weyl element in product order (last factor fastest), each factor's
/// permutations in enumerate_sym order.
inline InducedActionList weyl_list(const CaseDescriptor& c) {
  if (c.n() > 65535) throw std::out_of_range("weyl_list: dim V too large");
  std::vector<std::vector<Permutation>> per_factor;
  for (int n : c.factors()) per_factor.push_back(enumerate_sym(n));
  std::vector<std::uint16_t> images;
  images.reserve(static_cast<std::size_t>(c.weyl_order()) * c.n());
  std::vector<std::size_t> idx(per_factor.size(), 0);
  std::vector<Permutation> element(per_factor.size());
  while (true) {
    for (std::size_t f = 0; f < idx.size(); ++f) element[f] = per_factor[f][idx[f]];
    const auto p = induced_action(c, element);
    for (int x : p.images()) images.push_back(static_cast<std::uint16_t>(x));
    std::size_t f = idx.size();
    while (f > 0) {
      --f;
      if (++idx[f] < per_factor[f].size()) break;
      idx[f] = 0;
      if (f == 0) return InducedActionList(c.n(), std::move(images));
    }
  }
}

/// One permutation per line, space-separated 1-based images.
inline void dump_actions(std::ostream& os, const InducedActionList& list) {
  for (std::size_t j = 0; j < list.size(); ++j) {
    auto e = list.element(j);
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? " " : "") << e[k];
    os << '\n';
  }
}

}  // namespace gitstrat
