#include <gtest/gtest.h>

#include <string>

#include "hgsq/closed_forms.hpp"
#include "hgsq/error.hpp"
#include "hgsq/formula.hpp"
#include "hgsq/report.hpp"

#include "json.hpp"

using namespace hgsq;

namespace {

GroupSpec spec_of(const Triple& t) { return make_group(t.d, t.e, t.k); }

}  // namespace

TEST(ReportRow, FormulaRow) {
  const ReportRow r = formula_row(make_group(2, 3, 2), make_group(1, 6, 1));
  EXPECT_EQ(r.n, 6);
  EXPECT_EQ(r.gamma, (Triple{2, 3, 2}));
  EXPECT_EQ(r.g, (Triple{1, 6, 1}));
  EXPECT_EQ(r.count, 3);
  EXPECT_FALSE(r.incompatible);
  EXPECT_EQ(r.method, RowMethod::Formula);
}

TEST(ReportRow, IncompatibleRow) {
  const ReportRow r = formula_row(make_group(2, 21, 8), make_group(3, 14, 9));
  EXPECT_TRUE(r.incompatible);
  EXPECT_EQ(r.count, 0);
  EXPECT_NE(to_json(r).find("\"incompatible\""), std::string::npos);
}

TEST(Json, Schema) {
  const auto ex = seven_prime_example();
  const ReportRow r = formula_row(ex.groups[0], ex.groups[2]);
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_TRUE(j.at("n").is_string());
  EXPECT_TRUE(j.at("count").is_string());
  EXPECT_EQ(j.at("count").get<std::string>(), "74556542784");
  EXPECT_EQ(j.at("n").get<std::string>(), "16309243734");
  EXPECT_EQ(j.at("gamma").at("d").get<u64>(), 42U);
  EXPECT_EQ(j.at("g").at("e").get<u64>(), ex.groups[2].e);
  EXPECT_EQ(j.at("status"), "ok");
  EXPECT_EQ(j.at("method"), "formula");
}

TEST(Json, RoundTripAndRecompute) {
  std::vector<ReportRow> rows;
  for (u64 n : {6ULL, 30ULL, 42ULL, 105ULL}) {
    for (const auto& a : enumerate_groups(n))
      for (const auto& b : enumerate_groups(n)) rows.push_back(formula_row(a, b));
  }
  const auto ex = seven_prime_example();
  for (const auto& g : ex.groups) rows.push_back(formula_row(ex.groups[0], g));
  const std::vector<ReportRow> back = parse_report_rows(to_json(rows));
  ASSERT_EQ(back, rows);
  for (const ReportRow& r : back) {
    EXPECT_EQ(count_hgs(spec_of(r.gamma), spec_of(r.g)), r.count);
    EXPECT_EQ(parse_report_row(to_json(r)), r);
  }
}

TEST(Json, ParseErrors) {
  for (const char* bad : {"", "{", "[]", R"({"n": 6})",
                          R"({"n":"6","gamma":{"d":2,"e":3,"k":2},"g":{"d":2,"e":3,"k":2},"count":"x","status":"ok","method":"formula"})",
                          R"({"n":"6","gamma":{"d":2,"e":3,"k":2},"g":{"d":2,"e":3,"k":2},"count":"2","status":"maybe","method":"formula"})"}) {
    try {
      parse_report_row(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidArgument) << bad;
    }
  }
}

TEST(Csv, Layout) {
  const std::string csv = to_csv({formula_row(make_group(2, 3, 2), make_group(1, 6, 1))});
  EXPECT_EQ(csv, "n,gamma,g,count,status,method\n6,\"2,3,2\",\"1,6,1\",3,ok,formula\n");
}

TEST(Markdown, Layout) {
  const std::string md = to_markdown({formula_row(make_group(2, 3, 2), make_group(2, 3, 2))});
  EXPECT_NE(md.find("| 6 | 2,3,2 | 2,3,2 | 2 | ok | formula |"), std::string::npos);
  EXPECT_EQ(md.rfind("| n |", 0), 0U);
}
