#pragma once

// Representations V = (tensor product of slots) of G = GL_{n_1} x ... x GL_{n_k},
// where each slot is the standard, second or third exterior power of one GL
// factor. Provides the weight list, the invariant inner product on t* and the
// Weyl-chamber canonicalization.
//
// Coordinate order: the last slot is the slowest index; the remaining slots
// vary lexicographically with the second-to-last fastest. Within a slot the
// basis wedge products are in lexicographic order of their index sets.

#include "gitstrat/combinadic.hpp"
#include "gitstrat/linalg.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gitstrat {

enum class SlotKind { standard = 1, wedge2 = 2, wedge3 = 3 };

inline int exterior_degree(SlotKind k) { return static_cast<int>(k); }

inline std::string_view to_string(SlotKind k) {
  switch (k) {
    case SlotKind::standard: return "standard";
    case SlotKind::wedge2: return "wedge2";
    case SlotKind::wedge3: return "wedge3";
  }
  return "?";
}

inline SlotKind parse_slot_kind(std::string_view s) {
  if (s == "standard") return SlotKind::standard;
  if (s == "wedge2") return SlotKind::wedge2;
  if (s == "wedge3") return SlotKind::wedge3;
  throw std::invalid_argument("unknown slot kind '" + std::string(s) + "'");
}

struct TensorSlot {
  int factor = 1;  // 1-based index into CaseDescriptor::factors
  SlotKind kind = SlotKind::standard;
  friend bool operator==(const TensorSlot&, const TensorSlot&) = default;
};

struct Block {
  int offset;  // 0-based first coordinate of t*
  int size;
};

class CaseDescriptor {
 public:
  CaseDescriptor(std::vector<int> factors, std::vector<TensorSlot> slots, std::optional<int> builtin_id = {})
      : factors_(std::move(factors)), slots_(std::move(slots)), builtin_id_(builtin_id) {
    if (factors_.empty()) throw std::invalid_argument("case needs at least one GL factor");
    if (slots_.empty()) throw std::invalid_argument("case needs at least one tensor slot");
    int offset = 0;
    for (int n : factors_) {
      if (n < 1) throw std::invalid_argument("factor dimensions must be positive");
      blocks_.push_back({offset, n});
      offset += n;
      rank_ += n - 1;
    }
    dim_t_ = offset;
    weyl_order_ = 1;
    for (int n : factors_)
      for (int k = 2; k <= n; ++k) weyl_order_ *= k;
    dim_v_ = 1;
    for (const auto& s : slots_) {
      if (s.factor < 1 || s.factor > static_cast<int>(factors_.size()))
        throw std::invalid_argument("slot refers to factor " + std::to_string(s.factor) + " which does not exist");
      const int n = factors_[s.factor - 1];
      const int w = exterior_degree(s.kind);
      if (w > n)
        throw std::invalid_argument("exterior degree " + std::to_string(w) + " exceeds GL_" + std::to_string(n));
      slot_tables_.emplace_back(n, w);
      dim_v_ *= slot_tables_.back().count();
    }
    // Loop order from slowest to fastest: last slot, then slots 0..k-2.
    const int k = static_cast<int>(slots_.size());
    loop_order_.push_back(k - 1);
    for (int s = 0; s + 1 < k; ++s) loop_order_.push_back(s);
    stride_.assign(k, 1);
    std::int64_t stride = 1;
    for (auto it = loop_order_.rbegin(); it != loop_order_.rend(); ++it) {
      stride_[*it] = stride;
      stride *= slot_tables_[*it].count();
    }
  }

  const std::vector<int>& factors() const { return factors_; }
  const std::vector<TensorSlot>& slots() const { return slots_; }
  std::optional<int> builtin_id() const { return builtin_id_; }

  /// dim V
  int n() const { return static_cast<int>(dim_v_); }
  /// number of coordinates of t*
  int d() const { return dim_t_; }
  /// rank of the group, sum (n_i - 1)
  int r() const { return rank_; }
  std::int64_t weyl_order() const { return weyl_order_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Rank tables of slot s for its (n, w) context.
  const RankTables& slot_tables(int s) const { return slot_tables_[s]; }

  /// Per-slot 1-based subset ranks of a 1-based coordinate.
  std::vector<int> decode(int coordinate) const {
    std::int64_t rest = coordinate - 1;
    std::vector<int> ranks(slots_.size());
    for (std::size_t s = 0; s < slots_.size(); ++s)
      ranks[s] = static_cast<int>((rest / stride_[s]) % slot_tables_[s].count()) + 1;
    return ranks;
  }

  int encode(const std::vector<int>& slot_ranks) const {
    std::int64_t idx = 0;
    for (std::size_t s = 0; s < slots_.size(); ++s) idx += (slot_ranks[s] - 1) * stride_[s];
    return static_cast<int>(idx) + 1;
  }

  std::string label() const {
    if (builtin_id_) return std::to_string(*builtin_id_);
    std::string out = "custom(";
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      if (s) out += "x";
      out += std::string(to_string(slots_[s].kind)) + "[GL" + std::to_string(factors_[slots_[s].factor - 1]) + "]";
    }
    return out + ")";
  }

  /// Structural equality: same factors and slots.
  friend bool operator==(const CaseDescriptor& a, const CaseDescriptor& b) {
    return a.factors_ == b.factors_ && a.slots_ == b.slots_;
  }

 private:
  std::vector<int> factors_;
  std::vector<TensorSlot> slots_;
  std::optional<int> builtin_id_;
  std::vector<Block> blocks_;
  std::vector<RankTables> slot_tables_;
  std::vector<int> loop_order_;
  std::vector<std::int64_t> stride_;
  int dim_t_ = 0;
  int rank_ = 0;
  std::int64_t dim_v_ = 1;
  std::int64_t weyl_order_ = 1;
};

/// The four built-in cases:
///   1: GL3 x GL3 x GL2 on Aff^3 (x) Aff^3 (x) Aff^2
///   2: GL6 x GL2 on wedge^2 Aff^6 (x) Aff^2
///   3: GL5 x GL4 on wedge^2 Aff^5 (x) Aff^4
///   4: GL8 on wedge^3 Aff^8
inline CaseDescriptor builtin_case(int id) {
  using K = SlotKind;
  switch (id) {
    case 1: return CaseDescriptor({3, 3, 2}, {{1, K::standard}, {2, K::standard}, {3, K::standard}}, 1);
    case 2: return CaseDescriptor({6, 2}, {{1, K::wedge2}, {2, K::standard}}, 2);
    case 3: return CaseDescriptor({5, 4}, {{1, K::wedge2}, {2, K::standard}}, 3);
    case 4: return CaseDescriptor({8}, {{1, K::wedge3}}, 4);
    default: throw std::out_of_range("no built-in case " + std::to_string(id) + " (expected 1..4)");
  }
}

/// Weights of the coordinates, gamma_1..gamma_N. A slot of degree w on GL_n
/// with index set S contributes sum_{s in S} e_s - (w/n)(1,...,1) to its block.
inline std::vector<RatVector> weights(const CaseDescriptor& c) {
  std::vector<RatVector> out;
  out.reserve(c.n());
  std::vector<int> subset(3);
  for (int coord = 1; coord <= c.n(); ++coord) {
    RatVector g(c.d());
    const auto ranks = c.decode(coord);
    for (std::size_t s = 0; s < c.slots().size(); ++s) {
      const auto& slot = c.slots()[s];
      const Block blk = c.blocks()[slot.factor - 1];
      const int w = exterior_degree(slot.kind);
      const Rational shift = rat(w, blk.size);
      c.slot_tables(static_cast<int>(s)).unrank_into(ranks[s], subset.data());
      for (int k = 0; k < blk.size; ++k) g[blk.offset + k] -= shift;
      for (int k = 0; k < w; ++k) g[blk.offset + subset[k] - 1] += Rational(1);
    }
    out.push_back(std::move(g));
  }
  return out;
}

/// W-invariant inner product on t*: the coordinatewise sum over all blocks.
inline Rational inner_product(const CaseDescriptor& c, const RatVector& a, const RatVector& b) {
  if (a.size() != static_cast<std::size_t>(c.d()) || b.size() != static_cast<std::size_t>(c.d()))
    throw std::invalid_argument("inner product: vectors must have length " + std::to_string(c.d()));
  return dot(a, b);
}

/// Sorts each factor block nondecreasingly, landing in the chosen Weyl chamber.
inline RatVector chamber_sort(const CaseDescriptor& c, RatVector a) {
  if (a.size() != static_cast<std::size_t>(c.d()))
    throw std::invalid_argument("chamber sort: vector must have length " + std::to_string(c.d()));
  for (const auto& blk : c.blocks()) std::sort(a.begin() + blk.offset, a.begin() + blk.offset + blk.size);
  return a;
}

inline RatVector zero_vector(const CaseDescriptor& c) { return RatVector(static_cast<std::size_t>(c.d())); }

inline bool in_chamber(const CaseDescriptor& c, const RatVector& a) {
  for (const auto& blk : c.blocks())
    for (int k = 1; k < blk.size; ++k)
      if (a[blk.offset + k - 1] > a[blk.offset + k]) return false;
  return true;
}

inline bool block_sums_zero(const CaseDescriptor& c, const RatVector& a) {
  for (const auto& blk : c.blocks()) {
    Rational sum;
    for (int k = 0; k < blk.size; ++k) sum += a[blk.offset + k];
    if (!sum.is_zero()) return false;
  }
  return true;
}

// Case-config documents are JSON:
//   {"factors": [3, 3, 2],
//    "slots": [[1, "standard"], [2, "standard"], [3, "standard"]]}
// Factor indices in "slots" are 1-based.

inline CaseDescriptor parse_case_config(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("case config: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("factors") || !doc.contains("slots"))
    throw std::invalid_argument("case config: expected an object with 'factors' and 'slots'");
  const auto& jf = doc["factors"];
  const auto& js = doc["slots"];
  if (!jf.is_array() || !js.is_array()) throw std::invalid_argument("case config: 'factors' and 'slots' must be arrays");
  std::vector<int> factors;
  for (const auto& f : jf) {
    if (!f.is_number_integer()) throw std::invalid_argument("case config: factor dimensions must be integers");
    factors.push_back(f.get<int>());
  }
  std::vector<TensorSlot> slots;
  for (const auto& s : js) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_string())
      throw std::invalid_argument("case config: each slot must be [factor_index, kind]");
    slots.push_back({s[0].get<int>(), parse_slot_kind(s[1].get<std::string>())});
  }
  return CaseDescriptor(std::move(factors), std::move(slots));
}

inline std::string serialize_case_config(const CaseDescriptor& c) {
  nlohmann::json doc;
  doc["factors"] = c.factors();
  doc["slots"] = nlohmann::json::array();
  for (const auto& s : c.slots()) doc["slots"].push_back({s.factor, std::string(to_string(s.kind))});
  return doc.dump();
}

}  // namespace gitstrat
