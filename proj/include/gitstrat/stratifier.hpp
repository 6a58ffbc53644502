#pragma once

// Merges candidates over all R into the set of distinct nonzero chamber
// points beta, and classifies each coordinate j by comparing (beta, gamma_j)_*
// with (beta, beta)_*: equal puts j in Z_beta, greater puts it in W_beta.

#include "gitstrat/beta_solver.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace gitstrat {

struct Witness {
  int r = 0;
  Combination combination;
  std::vector<Rational> coeffs;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct StratumRecord {
  RatVector beta;
  std::vector<int> z_indices;
  std::vector<int> w_indices;
  std::vector<Witness> witnesses;  // first entry is the first occurrence
};

struct RankStats {
  std::int64_t combinations = 0;  // C(N, R)
  std::int64_t representatives = 0;
  std::int64_t accepted = 0;
};

struct StrataSet {
  std::string case_label;
  std::vector<StratumRecord> records;
  std::map<int, RankStats> stats;
};

/// Exact componentwise equality.
inline bool veq(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("veq: vector length mismatch");
  return a == b;
}

/// Fills the Z/W index sets of a record from its beta.
inline void classify(const WeightSystem& ws, StratumRecord& rec) {
  const auto& c = ws.descriptor();
  const Rational norm = inner_product(c, rec.beta, rec.beta);
  rec.z_indices.clear();
  rec.w_indices.clear();
  for (int j = 1; j <= c.n(); ++j) {
    const Rational k = inner_product(c, rec.beta, ws.weight(j));
    if (k == norm)
      rec.z_indices.push_back(j);
    else if (k > norm)
      rec.w_indices.push_back(j);
  }
}

/// R values in processing order: hi down to 2, then 1 last.
inline std::vector<int> processing_order(int lo, int hi) {
  std::vector<int> order;
  for (int r = hi; r >= std::max(lo, 2); --r) order.push_back(r);
  if (lo <= 1 && hi >= 1) order.push_back(1);
  return order;
}

/// First-occurrence deduplication over exact beta equality, dropping the zero
/// vector, then classification. `groups` must already be in processing order.
/// With `pairwise` set, duplicates are found by comparing against every
/// earlier record instead of hashing.
inline StrataSet dedup_and_classify(const WeightSystem& ws, const std::vector<std::vector<BetaCandidate>>& groups,
                                    bool pairwise = false) {
  StrataSet out;
  out.case_label = ws.descriptor().label();
  std::unordered_map<std::string, std::size_t> seen;
  const RatVector zero = zero_vector(ws.descriptor());
  for (const auto& group : groups)
    for (const auto& cand : group) {
      if (veq(cand.beta, zero)) continue;
      Witness wit{cand.r, cand.witness, cand.coeffs};
      std::size_t found = out.records.size();
      if (pairwise) {
        for (std::size_t i = 0; i < out.records.size(); ++i)
          if (veq(out.records[i].beta, cand.beta)) {
            found = i;
            break;
          }
      } else {
        auto [it, inserted] = seen.try_emplace(cand.beta.str(), out.records.size());
        if (!inserted) found = it->second;
      }
      if (found < out.records.size()) {
        out.records[found].witnesses.push_back(std::move(wit));
      } else {
        StratumRecord rec;
        rec.beta = cand.beta;
        rec.witnesses.push_back(std::move(wit));
        out.records.push_back(std::move(rec));
      }
    }
  for (auto& rec : out.records) classify(ws, rec);
  return out;
}

}  // namespace gitstrat
