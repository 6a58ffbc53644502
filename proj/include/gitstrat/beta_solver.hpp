#pragma once

// For a witness set of weights gamma_{j_1..j_R}, finds the point
// beta' = sum c_k gamma_{j_k} with sum c_k = 1 that is orthogonal to every
// gamma_{j_k} - gamma_{j_1}. The witness is kept when that system is
// nonsingular and every c_k > 0; beta' is then moved into the Weyl chamber.

#include "gitstrat/case_catalog.hpp"
#include "gitstrat/linalg.hpp"
#include "gitstrat/orbit_sieve.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <vector>

namespace gitstrat {

/// A case with its weights and their Gram matrix (gamma_a, gamma_b)_*.
class WeightSystem {
 public:
  explicit WeightSystem(CaseDescriptor c) : case_(std::move(c)), weights_(gitstrat::weights(case_)) {
    const auto n = weights_.size();
    gram_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b)
        gram_[a * n + b] = gram_[b * n + a] = inner_product(case_, weights_[a], weights_[b]);
  }

  const CaseDescriptor& descriptor() const { return case_; }
  const std::vector<RatVector>& weights() const { return weights_; }
  /// 1-based coordinate index.
  const RatVector& weight(int j) const { return weights_[j - 1]; }
  const Rational& gram(int a, int b) const { return gram_[(a - 1) * weights_.size() + (b - 1)]; }

 private:
  CaseDescriptor case_;
  std::vector<RatVector> weights_;
  std::vector<Rational> gram_;
};

struct BetaCandidate {
  int r = 0;
  Combination witness;
  std::vector<Rational> coeffs;
  RatVector beta_raw;  // before chamber sort
  RatVector beta;      // chamber_sort(beta_raw)
};

/// R x (R+1) augmented matrix: first row all ones, row k (k >= 2) holds
/// (gamma_{j_k} - gamma_{j_1}, gamma_{j_l})_* with right-hand side 0.
inline RatMatrix build_closest_matrix(const WeightSystem& ws, const Combination& witness) {
  const int r = witness.r();
  RatMatrix m(r, r + 1);
  for (int l = 0; l <= r; ++l) m(0, l) = Rational(1);
  for (int k = 1; k < r; ++k)
    for (int l = 0; l < r; ++l) m(k, l) = ws.gram(witness[k], witness[l]) - ws.gram(witness[0], witness[l]);
  return m;
}

/// Convexity coefficients of the closest point, or nullopt when the system
/// is singular (the (R,R) entry of the reduced augmented matrix is not 1).
inline std::optional<std::vector<Rational>> beta_coefficient(const WeightSystem& ws, const Combination& witness) {
  const int r = witness.r();
  const RatMatrix z = rref(build_closest_matrix(ws, witness));
  if (z(r - 1, r - 1) != Rational(1)) return std::nullopt;
  std::vector<Rational> x(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) x[i] = z(i, r);
  return x;
}

inline bool all_positive(const std::vector<Rational>& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() > 0; });
}

/// Closest point for one witness if it is accepted.
inline std::optional<BetaCandidate> solve_witness(const WeightSystem& ws, const Combination& witness) {
  auto coeffs = beta_coefficient(ws, witness);
  if (!coeffs || !all_positive(*coeffs)) return std::nullopt;
  BetaCandidate out;
  out.r = witness.r();
  out.witness = witness;
  out.beta_raw = RatVector(static_cast<std::size_t>(ws.descriptor().d()));
  for (int k = 0; k < witness.r(); ++k) out.beta_raw += (*coeffs)[k] * ws.weight(witness[k]);
  out.coeffs = std::move(*coeffs);
  out.beta = chamber_sort(ws.descriptor(), out.beta_raw);
  return out;
}

/// Accepted candidates in representative order. Work is spread over
/// `threads` workers; the result does not depend on the thread count.
inline std::vector<BetaCandidate> solve_candidates(const WeightSystem& ws, const RepresentativeSet& reps,
                                                   unsigned threads = 1) {
  const std::size_t n = reps.reps.size();
  std::vector<std::optional<BetaCandidate>> slots(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) slots[i] = solve_witness(ws, reps.reps[i]);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  std::vector<BetaCandidate> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace gitstrat
