#include "gitstrat/pipeline.hpp"
#include "gitstrat/serialize.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace gitstrat;

namespace {

const ComputeResult& case_one() {
  static const ComputeResult res = [] {
    ComputeOptions opt;
    opt.threads = 1;
    return compute(builtin_case(1), opt);
  }();
  return res;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(ScaledForm, Primitive) {
  const auto [scale, ints] = scaled_form(RatVector{rat(-1, 21), rat(-1, 21), rat(2, 21), 0, 0, 0, rat(-1, 14), rat(1, 14)});
  EXPECT_EQ(scale, rat(1, 42));
  EXPECT_EQ(ints, (std::vector<BigInt>{-2, -2, 4, 0, 0, 0, -3, 3}));
  const auto [s2, i2] = scaled_form(RatVector{4, -6});
  EXPECT_EQ(s2, Rational(2));
  EXPECT_EQ(i2, (std::vector<BigInt>{2, -3}));
}

TEST(Json, RoundTrip) {
  const auto& s = case_one().strata;
  const auto doc = to_json(s, 18);
  const auto back = strata_from_json(nlohmann::json::parse(doc.dump()));
  EXPECT_TRUE(back == s);
  EXPECT_EQ(doc["records"].size(), 49u);
  EXPECT_EQ(doc["stats"]["5"]["representatives"], 144);
  EXPECT_TRUE(doc["records"][0]["beta"][0].is_string());
}

TEST(Json, RationalsAsStrings) {
  const auto doc = to_json(case_one().strata, 18);
  for (const auto& rec : doc["records"])
    for (const auto& x : rec["beta"]) EXPECT_NE(x.get<std::string>().find('/'), std::string::npos);
}

TEST(Csv, OneLinePerBeta) {
  std::ostringstream os;
  write_csv(os, case_one().strata);
  EXPECT_EQ(count(os.str(), "\n"), 50u);
  EXPECT_EQ(os.str().rfind("index,beta,z,w\n", 0), 0u);
}

TEST(Latex, RowCountAndForm) {
  std::ostringstream os;
  write_latex(os, case_one().strata);
  const std::string out = os.str();
  EXPECT_EQ(count(out, "${\\beta}_{"), 49u);
  EXPECT_NE(out.find("\\begin{longtable}"), std::string::npos);
  EXPECT_NE(out.find("\\end{longtable}"), std::string::npos);
}

TEST(Latex, EmptyIndexListsAsDash) {
  StrataSet s;
  s.records.push_back({RatVector{rat(-1, 2), rat(1, 2)}, {2}, {}, {}});
  std::ostringstream os;
  write_latex(os, s);
  EXPECT_NE(os.str().find("${\\beta}_{1} = \\tfrac {1} {2} (-1,1)$ & $2$ & $-$"), std::string::npos) << os.str();
}
