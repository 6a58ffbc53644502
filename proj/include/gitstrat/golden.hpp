#pragma once

// Reference beta tables and set-level comparison against computed strata.
// The file grammar is documented in data/golden/FORMAT.md.

#include "gitstrat/case_catalog.hpp"
#include "gitstrat/stratifier.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#ifndef GITSTRAT_GOLDEN_DIR
#define GITSTRAT_GOLDEN_DIR "data/golden"
#endif

namespace gitstrat {

struct GoldenRow {
  int index = 0;  // beta_index in the source table
  Rational scale;
  std::vector<BigInt> integers;
  std::vector<int> z_indices;
  std::vector<int> w_indices;

  RatVector beta() const {
    RatVector v(integers.size());
    for (std::size_t i = 0; i < integers.size(); ++i) v[i] = scale * Rational(integers[i], 1);
    return v;
  }
};

struct GoldenTable {
  int case_id = 0;
  std::vector<GoldenRow> rows;
};

inline std::size_t expected_cardinality(int case_id) {
  switch (case_id) {
    case 1: return 49;
    case 2: return 81;
    case 3: return 292;
    case 4: return 183;
    default: return 0;
  }
}

namespace detail {
inline std::vector<int> parse_index_list(const std::string& s, int line) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("golden line " + std::to_string(line) + ": bad index '" + item + "'");
    }
  }
  return out;
}
}  // namespace detail

inline GoldenTable parse_golden(std::istream& in) {
  static const std::regex row_re(
      R"(^beta\s+(\d+)\s+(-?\d+(?:/\d+)?)\s+\(([-\d,\s]+)\)\s+Z\{([\d,]*)\}\s+W\{([\d,]*)\}\s*$)");
  GoldenTable table;
  std::optional<std::size_t> declared;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty() || text[0] == '#') continue;
    std::smatch m;
    if (text.rfind("case ", 0) == 0) {
      table.case_id = std::stoi(text.substr(5));
    } else if (text.rfind("rows ", 0) == 0) {
      declared = std::stoul(text.substr(5));
    } else if (std::regex_match(text, m, row_re)) {
      GoldenRow row;
      row.index = std::stoi(m[1]);
      row.scale = parse_rational(m[2].str());
      std::stringstream vs(m[3].str());
      std::string item;
      while (std::getline(vs, item, ',')) row.integers.emplace_back(std::stoll(item));
      row.z_indices = detail::parse_index_list(m[4], line);
      row.w_indices = detail::parse_index_list(m[5], line);
      if (row.index != static_cast<int>(table.rows.size()) + 1)
        throw std::invalid_argument("golden line " + std::to_string(line) + ": expected beta " +
                                    std::to_string(table.rows.size() + 1) + ", found beta " + std::to_string(row.index));
      table.rows.push_back(std::move(row));
    } else {
      throw std::invalid_argument("golden line " + std::to_string(line) + ": unrecognized record");
    }
  }
  if (!declared) throw std::invalid_argument("golden file lacks a 'rows' header");
  if (*declared != table.rows.size())
    throw std::invalid_argument("golden file declares " + std::to_string(*declared) + " rows but holds " +
                                std::to_string(table.rows.size()));
  if (auto want = expected_cardinality(table.case_id); want && want != table.rows.size())
    throw std::invalid_argument("golden case " + std::to_string(table.case_id) + " must have " + std::to_string(want) +
                                " rows, found " + std::to_string(table.rows.size()));
  return table;
}

inline std::string default_golden_path(int case_id) {
  return std::string(GITSTRAT_GOLDEN_DIR) + "/case" + std::to_string(case_id) + ".txt";
}

inline GoldenTable load_golden_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path);
  return parse_golden(in);
}

inline GoldenTable load_golden(int case_id) { return load_golden_file(default_golden_path(case_id)); }

/// Structural problems of a table read against a case: wrong length, beta
/// outside the chamber or outside t*, overlapping Z/W, repeated betas.
inline std::vector<std::string> validate_golden(const GoldenTable& table, const CaseDescriptor& c) {
  std::vector<std::string> problems;
  std::map<std::string, int> seen;
  for (const auto& row : table.rows) {
    const std::string tag = "beta " + std::to_string(row.index) + ": ";
    if (row.integers.size() != static_cast<std::size_t>(c.d())) {
      problems.push_back(tag + "wrong length");
      continue;
    }
    const RatVector b = row.beta();
    if (!in_chamber(c, b)) problems.push_back(tag + "not chamber-sorted");
    if (!block_sums_zero(c, b)) problems.push_back(tag + "block sums nonzero");
    for (int z : row.z_indices)
      if (std::binary_search(row.w_indices.begin(), row.w_indices.end(), z))
        problems.push_back(tag + "index " + std::to_string(z) + " in both Z and W");
    if (!std::is_sorted(row.z_indices.begin(), row.z_indices.end()) ||
        !std::is_sorted(row.w_indices.begin(), row.w_indices.end()))
      problems.push_back(tag + "index lists not sorted");
    if (auto [it, ok] = seen.emplace(b.str(), row.index); !ok)
      problems.push_back(tag + "duplicates beta " + std::to_string(it->second));
  }
  return problems;
}

struct CompareReport {
  std::vector<std::string> missing;     // in the table, not computed
  std::vector<std::string> extra;       // computed, not in the table
  std::vector<std::string> mismatched;  // same beta, different Z or W
  bool empty() const { return missing.empty() && extra.empty() && mismatched.empty(); }
  std::size_t size() const { return missing.size() + extra.size() + mismatched.size(); }
};

namespace detail {
inline std::string join_indices(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}
}  // namespace detail

/// Set comparison on (beta, Z, W) triples.
inline CompareReport compare(const StrataSet& computed, const GoldenTable& golden) {
  CompareReport report;
  std::map<std::string, const StratumRecord*> have;
  for (const auto& rec : computed.records) have.emplace(rec.beta.str(), &rec);
  std::map<std::string, bool> matched;
  for (const auto& row : golden.rows) {
    const std::string key = row.beta().str();
    const std::string tag = "beta " + std::to_string(row.index) + " " + key;
    auto it = have.find(key);
    if (it == have.end()) {
      report.missing.push_back(tag);
      continue;
    }
    matched[key] = true;
    if (it->second->z_indices != row.z_indices)
      report.mismatched.push_back(tag + ": Z computed " + detail::join_indices(it->second->z_indices) + " vs table " +
                                  detail::join_indices(row.z_indices));
    if (it->second->w_indices != row.w_indices)
      report.mismatched.push_back(tag + ": W computed " + detail::join_indices(it->second->w_indices) + " vs table " +
                                  detail::join_indices(row.w_indices));
  }
  for (const auto& rec : computed.records)
    if (!matched.count(rec.beta.str())) report.extra.push_back(rec.beta.str());
  return report;
}

/// A table as a StrataSet (no witnesses), for reflexive comparisons.
inline StrataSet golden_as_strata(const GoldenTable& golden) {
  StrataSet s;
  s.case_label = std::to_string(golden.case_id);
  for (const auto& row : golden.rows) s.records.push_back({row.beta(), row.z_indices, row.w_indices, {}});
  return s;
}

}  // namespace gitstrat
