#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "hgsq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hgsq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(CliGroups, Six) {
  const Outcome o = run({"--format", "json", "groups", "6"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j.at("count"), "2");
  EXPECT_EQ(j.at("groups").size(), 2U);
}

TEST(CliGroups, FortyTwo) {
  const Outcome o = run({"--format", "json", "groups", "42"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(nlohmann::json::parse(o.out).at("groups").size(), 6U);
}

TEST(CliGroups, SevenPrimeOrderSuppressesRows) {
  const Outcome o = run({"--format", "json", "groups", "16309243734"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j.at("count"), "272736");
  EXPECT_TRUE(j.at("rows_suppressed").get<bool>());
  EXPECT_FALSE(o.err.empty());
}

TEST(CliGroups, Errors) {
  EXPECT_EQ(run({"groups", "12"}).code, 2);
  EXPECT_EQ(run({"--factor-bound", "10", "groups", "16309243734"}).code, 3);
  EXPECT_EQ(run({"groups", "abc"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliHgs, SixMatrix) {
  const Outcome o = run({"--format", "json", "hgs", "6", "--matrix"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j.at("matrix"), nlohmann::json::parse(R"([["1","2"],["3","2"]])"));
  EXPECT_EQ(j.at("classes")[0].at("e"), 6);
}

TEST(CliHgs, MatrixOrderMatchesGroups) {
  const auto groups = nlohmann::json::parse(run({"--format", "json", "groups", "42"}).out);
  const auto matrix = nlohmann::json::parse(run({"--format", "json", "hgs", "42", "--matrix"}).out);
  ASSERT_EQ(groups.at("groups").size(), matrix.at("classes").size());
  for (std::size_t i = 0; i < matrix.at("classes").size(); ++i) {
    for (const char* key : {"d", "e", "k"}) {
      EXPECT_EQ(groups.at("groups")[i].at(key), matrix.at("classes")[i].at(key));
    }
  }
}

TEST(CliHgs, SevenPrimePair) {
  const Outcome o = run({"--format", "json", "hgs", "16309243734", "--gamma", "42,388315327,24171675",
                         "--g", "42,388315327,44645768"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  const auto& row = j.is_array() ? j[0] : j;
  EXPECT_EQ(row.at("count"), "74556542784");
  EXPECT_EQ(row.at("method"), "formula");
}

TEST(CliHgs, OracleMethodBoth) {
  const Outcome o = run({"--format", "csv", "hgs", "6", "--gamma", "2,3,2", "--g", "2,3,2", "--oracle"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("6,\"2,3,2\",\"2,3,2\",2,ok,both"), std::string::npos) << o.out;
}

TEST(CliHgs, NonCanonicalKIsNoted) {
  // 20 == -1 mod 21 generates the same subgroup of order 2 as itself; 5 has order 6
  const Outcome o = run({"--format", "csv", "hgs", "42", "--gamma", "6,7,5", "--g", "6,7,3"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_FALSE(o.err.empty());
  EXPECT_NE(o.out.find("\"6,7,3\",\"6,7,3\""), std::string::npos) << o.out;
}

TEST(CliHgs, Errors) {
  EXPECT_EQ(run({"hgs", "6", "--gamma", "2,3,2", "--g", "2,5,4"}).code, 2);
  EXPECT_EQ(run({"hgs", "6", "--gamma", "2,3,1", "--g", "2,3,2"}).code, 2);
  EXPECT_EQ(run({"hgs", "6", "--gamma", "2,3"}).code, 2);
  EXPECT_EQ(run({"--oracle-hol-order-bound", "1", "hgs", "6", "--gamma", "2,3,2", "--g", "2,3,2", "--oracle"}).code, 2);
  EXPECT_EQ(run({"--hol-order-bound", "1", "hgs", "6", "--gamma", "2,3,2", "--g", "2,3,2", "--oracle"}).code, 3);
}

TEST(CliVerify, Six) {
  const Outcome o = run({"verify", "6"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("all checks passed"), std::string::npos);
}

TEST(CliVerify, InjectedFault) {
  const Outcome o = run({"verify", "6", "--inject-fault-lambda", "1"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("MISMATCH"), std::string::npos);
}

TEST(CliPaper, Example8) {
  const Outcome o = run({"--format", "json", "paper", "example8"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  ASSERT_EQ(j.size(), 4U);
  EXPECT_EQ(j[0].at("count"), "692355072");
  EXPECT_EQ(j[1].at("count"), "656228352");
  EXPECT_EQ(j[2].at("count"), "74556542784");
  EXPECT_EQ(j[3].at("count"), "723131904");
}

TEST(CliPaper, TwoPrime) {
  const Outcome o = run({"--format", "json", "paper", "pq", "7", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("\"16\""), std::string::npos) << o.out;
  EXPECT_EQ(run({"paper", "pq", "5", "3"}).code, 2);
}

TEST(CliPaper, ThreePrime) {
  const Outcome o = run({"paper", "threeprime", "2", "3", "7"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(count_of(o.out, "type "), 12U) << o.out;
  EXPECT_EQ(run({"paper", "threeprime", "3", "5", "11"}).code, 2);
}
