// gitstrat: compute, verify and inspect beta sets of the built-in cases or
// user-defined tensor/exterior-power representations.

#include "gitstrat/gitstrat.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace gitstrat;

CaseDescriptor load_case(const std::string& selector) {
  if (selector.size() == 1 && std::isdigit(static_cast<unsigned char>(selector[0])))
    return builtin_case(selector[0] - '0');
  std::ifstream in(selector);
  if (!in) throw std::runtime_error("cannot open case config " + selector);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_case_config(ss.str());
}

void print_report(std::ostream& os, const RunReport& rep) {
  os << "case " << rep.case_label << "\n";
  os << "  weyl action list: " << std::fixed << std::setprecision(3) << rep.actions_seconds << " s\n";
  for (auto it = rep.per_r.rbegin(); it != rep.per_r.rend(); ++it) {
    const int r = it->first;
    const auto& st = it->second;
    os << "  R=" << r << "  C(N,R)=" << st.combinations << "  representatives=" << st.representatives
       << "  accepted=" << st.accepted << "  sieve " << rep.sieve_seconds.at(r) << " s, solve "
       << rep.solve_seconds.at(r) << " s\n";
  }
  os << "  stratify: " << rep.stratify_seconds << " s\n";
  os << "  |B| = " << rep.cardinality << "\n";
  if (!rep.output_path.empty()) os << "  written to " << rep.output_path << "\n";
}

void write_output(const StrataSet& s, const CaseDescriptor& c, const std::string& format, std::ostream& os) {
  if (format == "json")
    os << to_json(s, c.n()).dump(1) << "\n";
  else if (format == "csv")
    write_csv(os, s);
  else
    write_latex(os, s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation of the beta set of a GIT stratification"};
  app.require_subcommand(1);

  std::string case_sel;
  std::string rank_range;
  std::string format = "json";
  std::string out_path;
  unsigned threads = 0;
  bool pairwise = false;
  bool quiet = false;
  std::string dump_actions_path;
  std::string dump_reps_dir;

  auto* compute_cmd = app.add_subcommand("compute", "Run sieve, solver and stratification for one case");
  compute_cmd->add_option("--case", case_sel, "Built-in case 1..4 or path to a case-config JSON")->required();
  compute_cmd->add_option("--rank-range", rank_range, "Subset sizes to process, A..B (default 1..r)");
  compute_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "latex", "csv"}));
  compute_cmd->add_option("--out", out_path, "Output file (default stdout)");
  compute_cmd->add_option("--threads", threads, "Solver worker threads (default: all cores)");
  compute_cmd->add_flag("--conformance-dedup", pairwise, "Pairwise O(Q^2) duplicate removal");
  compute_cmd->add_option("--dump-actions", dump_actions_path, "Write the induced Weyl permutations to this file");
  compute_cmd->add_option("--dump-reps", dump_reps_dir, "Write orbit representatives to DIR/reps_R<k>.txt");
  compute_cmd->add_flag("-q,--quiet", quiet, "No progress on stderr");

  std::string golden_path;
  auto* verify_cmd = app.add_subcommand("verify", "Compute a case and compare it against a reference table");
  verify_cmd->add_option("--case", case_sel, "Built-in case 1..4 or path to a case-config JSON")->required();
  verify_cmd->add_option("--golden", golden_path, "Reference table (default: shipped table of the case)");
  verify_cmd->add_option("--threads", threads, "Solver worker threads");
  verify_cmd->add_flag("--conformance-dedup", pairwise, "Pairwise O(Q^2) duplicate removal");
  verify_cmd->add_flag("-q,--quiet", quiet, "No progress on stderr");

  std::string mode;
  int comb_n = 0;
  int comb_r = 0;
  std::vector<std::int64_t> values;
  auto* comb_cmd = app.add_subcommand("combinadic", "Rank or unrank a combination in lexicographic order");
  comb_cmd->add_option("mode", mode, "rank | unrank")->required()->check(CLI::IsMember({"rank", "unrank"}));
  comb_cmd->add_option("--n", comb_n, "N")->required();
  comb_cmd->add_option("--r", comb_r, "R")->required();
  comb_cmd->add_option("values", values, "R indices to rank, or one rank to unrank")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*comb_cmd) {
      const RankTables tables(comb_n, comb_r);
      if (mode == "rank") {
        std::vector<int> idx(values.begin(), values.end());
        std::cout << rank(idx, tables) << "\n";
      } else {
        if (values.size() != 1) throw std::invalid_argument("unrank takes exactly one rank");
        const auto c = unrank(values[0], tables);
        for (int k = 0; k < c.r(); ++k) std::cout << (k ? " " : "") << c[k];
        std::cout << "\n";
      }
      return 0;
    }

    const CaseDescriptor c = load_case(case_sel);
    ComputeOptions opt;
    opt.threads = threads;
    opt.pairwise_dedup = pairwise;
    if (!quiet) opt.log = [](const std::string& m) { std::cerr << m << std::endl; };

    if (*compute_cmd) {
      if (!rank_range.empty()) std::tie(opt.r_lo, opt.r_hi) = parse_rank_range(rank_range);
      if (!dump_actions_path.empty()) {
        std::ofstream os(dump_actions_path);
        if (!os) throw std::runtime_error("cannot write " + dump_actions_path);
        dump_actions(os, weyl_list(c));
      }
      if (!dump_reps_dir.empty()) {
        const auto actions = weyl_list(c);
        const int hi = opt.r_hi ? opt.r_hi : std::min(c.r(), c.n());
        for (int r : processing_order(opt.r_lo, hi)) {
          const std::string path = dump_reps_dir + "/reps_R" + std::to_string(r) + ".txt";
          std::ofstream os(path);
          if (!os) throw std::runtime_error("cannot write " + path);
          dump_representatives(os, sieve(c, r, actions));
        }
      }
      auto result = compute(c, opt);
      if (out_path.empty()) {
        write_output(result.strata, c, format, std::cout);
      } else {
        std::ofstream os(out_path);
        if (!os) throw std::runtime_error("cannot write " + out_path);
        write_output(result.strata, c, format, os);
        result.report.output_path = out_path;
      }
      if (!quiet) print_report(std::cerr, result.report);
      return 0;
    }

    // verify
    if (golden_path.empty()) {
      if (!c.builtin_id()) throw std::invalid_argument("--golden is required for custom cases");
      golden_path = default_golden_path(*c.builtin_id());
    }
    const GoldenTable golden = load_golden_file(golden_path);
    auto result = compute(c, opt);
    if (result.strata.records.size() != golden.rows.size()) {
      std::cerr << "row count mismatch: computed " << result.strata.records.size() << " betas, table has "
                << golden.rows.size() << " rows\n";
      return 1;
    }
    if (auto problems = validate_golden(golden, c); !problems.empty()) {
      for (const auto& p : problems) std::cerr << "table: " << p << "\n";
      return 2;
    }
    const CompareReport report = compare(result.strata, golden);
    for (const auto& m : report.missing) std::cout << "missing: " << m << "\n";
    for (const auto& m : report.extra) std::cout << "extra: " << m << "\n";
    for (const auto& m : report.mismatched) std::cout << "mismatch: " << m << "\n";
    std::cout << (report.empty() ? "PASS" : "FAIL") << " case " << c.label() << ": " << result.strata.records.size()
              << " betas, " << report.size() << " discrepancies\n";
    return report.empty() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
