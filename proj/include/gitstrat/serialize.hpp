#pragma once

// JSON, CSV and LaTeX renderings of a StrataSet. Rationals are always written
// as "p/q" strings.

#include "gitstrat/stratifier.hpp"

#include "json.hpp"

#include <boost/integer/common_factor.hpp>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gitstrat {

/// beta = scale * integers with the integer vector primitive and scale > 0.
inline std::pair<Rational, std::vector<BigInt>> scaled_form(const RatVector& beta) {
  BigInt lcm = 1;
  for (const auto& x : beta) lcm = boost::multiprecision::lcm(lcm, x.denominator());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& x : beta) {
    ints.push_back(x.numerator() * (lcm / x.denominator()));
    g = boost::multiprecision::gcd(g, abs(ints.back()));
  }
  if (g == 0) return {Rational(1), ints};
  for (auto& v : ints) v /= g;
  return {Rational(g, lcm), ints};
}

inline nlohmann::json to_json(const StrataSet& s, int dim_v) {
  using nlohmann::json;
  json doc;
  doc["case"] = s.case_label;
  doc["n"] = dim_v;
  doc["records"] = json::array();
  for (const auto& rec : s.records) {
    json r;
    r["beta"] = json::array();
    for (const auto& x : rec.beta) r["beta"].push_back(x.str());
    r["z"] = rec.z_indices;
    r["w"] = rec.w_indices;
    r["witnesses"] = json::array();
    for (const auto& w : rec.witnesses) {
      json jw;
      jw["R"] = w.r;
      jw["combination"] = std::vector<int>(w.combination.indices().begin(), w.combination.indices().end());
      jw["coeffs"] = json::array();
      for (const auto& c : w.coeffs) jw["coeffs"].push_back(c.str());
      r["witnesses"].push_back(std::move(jw));
    }
    doc["records"].push_back(std::move(r));
  }
  json stats = json::object();
  for (const auto& [r, st] : s.stats)
    stats[std::to_string(r)] = {
        {"combinations", st.combinations}, {"representatives", st.representatives}, {"accepted", st.accepted}};
  doc["stats"] = std::move(stats);
  return doc;
}

inline StrataSet strata_from_json(const nlohmann::json& doc) {
  StrataSet s;
  s.case_label = doc.at("case").get<std::string>();
  const int n = doc.at("n").get<int>();
  for (const auto& r : doc.at("records")) {
    StratumRecord rec;
    std::vector<Rational> beta;
    for (const auto& x : r.at("beta")) beta.push_back(parse_rational(x.get<std::string>()));
    rec.beta = RatVector(std::move(beta));
    rec.z_indices = r.at("z").get<std::vector<int>>();
    rec.w_indices = r.at("w").get<std::vector<int>>();
    for (const auto& jw : r.at("witnesses")) {
      Witness w;
      w.r = jw.at("R").get<int>();
      w.combination = Combination(n, jw.at("combination").get<std::vector<int>>());
      for (const auto& c : jw.at("coeffs")) w.coeffs.push_back(parse_rational(c.get<std::string>()));
      rec.witnesses.push_back(std::move(w));
    }
    s.records.push_back(std::move(rec));
  }
  for (const auto& [key, st] : doc.at("stats").items())
    s.stats[std::stoi(key)] = {st.at("combinations").get<std::int64_t>(), st.at("representatives").get<std::int64_t>(),
                               st.at("accepted").get<std::int64_t>()};
  return s;
}

inline bool operator==(const StratumRecord& a, const StratumRecord& b) {
  return a.beta == b.beta && a.z_indices == b.z_indices && a.w_indices == b.w_indices && a.witnesses == b.witnesses;
}

inline bool operator==(const RankStats& a, const RankStats& b) {
  return a.combinations == b.combinations && a.representatives == b.representatives && a.accepted == b.accepted;
}

inline bool operator==(const StrataSet& a, const StrataSet& b) {
  return a.case_label == b.case_label && a.records == b.records && a.stats == b.stats;
}

namespace detail {
inline std::string join_space(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}
}  // namespace detail

/// index,beta,z,w with space-separated lists inside each field.
inline void write_csv(std::ostream& os, const StrataSet& s) {
  os << "index,beta,z,w\n";
  for (std::size_t i = 0; i < s.records.size(); ++i) {
    const auto& rec = s.records[i];
    os << i + 1 << ",";
    for (std::size_t k = 0; k < rec.beta.size(); ++k) os << (k ? " " : "") << rec.beta[k];
    os << "," << detail::join_space(rec.z_indices) << "," << detail::join_space(rec.w_indices) << "\n";
  }
}

/// Table rows in the form \beta_i = \tfrac{p}{q}(v_1,...,v_D) & Z & W.
inline void write_latex(std::ostream& os, const StrataSet& s) {
  auto list = [](const std::vector<int>& v) {
    if (v.empty()) return std::string("-");
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
  };
  os << "\\begin{longtable}{|l|l|l|}\n\\hline\n"
     << "$\\beta$ & $i$ such that $\\mathbbm a_i\\in Z_{\\beta}$ & $i$ such that $\\mathbbm a_i\\in W_{\\beta}$ \\\\\n"
     << "\\hline\n";
  for (std::size_t i = 0; i < s.records.size(); ++i) {
    const auto& rec = s.records[i];
    const auto [scale, ints] = scaled_form(rec.beta);
    os << "${\\beta}_{" << i + 1 << "} = ";
    if (scale != Rational(1)) os << "\\tfrac {" << scale.numerator() << "} {" << scale.denominator() << "} ";
    os << "(";
    for (std::size_t k = 0; k < ints.size(); ++k) os << (k ? "," : "") << ints[k];
    os << ")$ & $" << list(rec.z_indices) << "$ & $" << list(rec.w_indices) << "$ \\\\\n\\hline\n";
  }
  os << "\\end{longtable}\n";
}

}  // namespace gitstrat
