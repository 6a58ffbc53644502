#pragma once

// End-to-end computation: Weyl action list, then for each R the orbit sieve
// and the closest-point solver, then deduplication and classification.

#include "gitstrat/beta_solver.hpp"
#include "gitstrat/orbit_sieve.hpp"
#include "gitstrat/stratifier.hpp"
#include "gitstrat/weyl_action.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gitstrat {

struct ComputeOptions {
  int r_lo = 1;
  int r_hi = 0;  // 0 means the group rank r
  unsigned threads = 0;  // 0 means hardware concurrency
  bool pairwise_dedup = false;
  std::function<void(const std::string&)> log;
};

struct RunReport {
  std::string case_label;
  std::map<int, RankStats> per_r;
  std::size_t cardinality = 0;
  double actions_seconds = 0;
  std::map<int, double> sieve_seconds;
  std::map<int, double> solve_seconds;
  double stratify_seconds = 0;
  std::string output_path;
};

struct ComputeResult {
  StrataSet strata;
  RunReport report;
};

/// Parses "A..B" or a single "A".
inline std::pair<int, int> parse_rank_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("rank range must look like A..B, got '" + text + "'");
  }
}

inline ComputeResult compute(const CaseDescriptor& c, ComputeOptions opt = {}) {
  using clock = std::chrono::steady_clock;
  auto seconds_since = [](clock::time_point t0) { return std::chrono::duration<double>(clock::now() - t0).count(); };
  auto log = [&](const std::string& msg) {
    if (opt.log) opt.log(msg);
  };
  const int top = std::min(c.r(), c.n());
  const int hi = opt.r_hi == 0 ? top : opt.r_hi;
  if (opt.r_lo < 1 || hi > top || opt.r_lo > hi)
    throw std::out_of_range("rank range " + std::to_string(opt.r_lo) + ".." + std::to_string(hi) +
                            " must lie within 1.." + std::to_string(top));
  const unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());

  ComputeResult result;
  RunReport& report = result.report;
  report.case_label = c.label();

  auto t0 = clock::now();
  const WeightSystem ws(c);
  const InducedActionList actions = weyl_list(c);
  report.actions_seconds = seconds_since(t0);
  log("case " + c.label() + ": N=" + std::to_string(c.n()) + " D=" + std::to_string(c.d()) +
      " r=" + std::to_string(c.r()) + " |W|=" + std::to_string(actions.size()));

  std::vector<std::vector<BetaCandidate>> groups;
  for (int r : processing_order(opt.r_lo, hi)) {
    t0 = clock::now();
    const RepresentativeSet reps = sieve(c, r, actions);
    report.sieve_seconds[r] = seconds_since(t0);
    t0 = clock::now();
    groups.push_back(solve_candidates(ws, reps, threads));
    report.solve_seconds[r] = seconds_since(t0);
    auto& st = report.per_r[r];
    st.combinations = reps.total;
    st.representatives = static_cast<std::int64_t>(reps.reps.size());
    st.accepted = static_cast<std::int64_t>(groups.back().size());
    log("R=" + std::to_string(r) + ": C(N,R)=" + std::to_string(st.combinations) +
        " representatives=" + std::to_string(st.representatives) + " accepted=" + std::to_string(st.accepted));
  }

  t0 = clock::now();
  result.strata = dedup_and_classify(ws, groups, opt.pairwise_dedup);
  result.strata.stats = report.per_r;
  report.stratify_seconds = seconds_since(t0);
  report.cardinality = result.strata.records.size();
  log("|B| = " + std::to_string(report.cardinality));
  return result;
}

}  // namespace gitstrat
