#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "crankstat/cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = crankstat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TableCsv) {
  const auto r = run({"table", "--stat", "crank", "--n-max", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,m,count\n0,0,1\n1,-1,1\n1,0,-1\n1,1,1\n");

  const auto over = run({"table", "--stat", "ocrank", "--n-max", "50", "--format", "csv"});
  EXPECT_EQ(over.code, 0);
  EXPECT_NE(over.out.find("\n4,0,2\n"), std::string::npos);
}

TEST(Cli, TableJsonForColoredPartitions) {
  const auto r = run({"table", "--stat", "kcrank", "--k", "3", "--n-max", "20", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["k"], 3);
  EXPECT_EQ(doc["rows"][3]["counts"]["0"], "6");  // enumerated by hand
}

TEST(Cli, TableFromOracleAndRankRules) {
  EXPECT_EQ(run({"table", "--stat", "rank", "--n-max", "5", "--source", "oracle"}).code, 0);
  EXPECT_EQ(run({"table", "--stat", "rank", "--n-max", "5"}).code, 2);
  EXPECT_EQ(run({"table", "--stat", "ocrank", "--n-max", "30", "--source", "oracle"}).code, 2);
  EXPECT_EQ(run({"table", "--stat", "kcrank", "--n-max", "5"}).code, 2);
  EXPECT_EQ(run({"table", "--stat", "crank", "--k", "3", "--n-max", "5"}).code, 2);
  EXPECT_EQ(run({"table", "--stat", "spt", "--n-max", "5"}).code, 2);
}

TEST(Cli, OutputsAreByteIdentical) {
  const std::vector<std::string> args{"verify", "--check", "thm-1.4,euler", "--n-max", "80",
                                      "--omit-timing"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyOverlineUnimodal) {
  const auto r = run({"verify", "--check", "thm-1.4", "--n-max", "300"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& report = doc["reports"][0];
  EXPECT_EQ(report["verdict"], "pass");
  ASSERT_EQ(report["exceptions"].size(), 2u);
  EXPECT_EQ(report["exceptions"][0]["n"], 1);
  EXPECT_EQ(report["exceptions"][1]["n"], 2);
  EXPECT_NE(r.err.find("PASS overline-unimodal"), std::string::npos);
}

TEST(Cli, VerifyColoredConjecture) {
  const auto r = run({"verify", "--check", "conj-1.8", "--k", "2,3,4,5,6", "--n-max", "200"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["reports"].size(), 5u);
}

TEST(Cli, FailingCheckExitsOne) {
  // The first residual crank decreases from n = 0 to n = 1 at m = 0.
  const auto r = run({"verify", "--check", "overline-monotone", "--n-max", "20"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("FAIL overline-monotone"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--check", "thm-9.9"}).code, 2);
  EXPECT_EQ(run({"verify", "--check", "thm-1.5", "--n-max", "50", "--order", "40"}).code, 2);
  EXPECT_EQ(run({"verify", "--check", "conj-1.8", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"identity", "--id", "nope"}).code, 2);
  EXPECT_EQ(run({"identity", "--id", "crank-diff-heads", "--order", "10"}).code, 2);
  EXPECT_EQ(run({"crosscheck", "--stat", "ocrank", "--n-max", "40"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, IdentityCommands) {
  EXPECT_EQ(run({"identity", "--id", "lemma-3.2", "--order", "200"}).code, 0);
  EXPECT_EQ(run({"identity", "--id", "euler", "--order", "500"}).code, 0);
  EXPECT_EQ(run({"identity", "--id", "andrews-merca", "--order", "1000"}).code, 0);
  const auto all = run({"identity", "--id", "all", "--omit-timing"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(nlohmann::json::parse(all.out)["reports"].size(), 13u);
}

TEST(Cli, Crosscheck) {
  EXPECT_EQ(run({"crosscheck", "--stat", "ocrank", "--n-max", "25"}).code, 0);
  EXPECT_EQ(run({"crosscheck", "--stat", "m2crank", "--n-max", "25"}).code, 0);
  EXPECT_EQ(run({"crosscheck", "--stat", "crank", "--n-max", "40"}).code, 0);
  EXPECT_EQ(run({"crosscheck", "--stat", "kcrank", "--k", "3", "--n-max", "15"}).code, 0);
}

TEST(Cli, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "crankstat_cli_test.csv";
  const auto r = run({"table", "--stat", "m2crank", "--n-max", "2", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "n,m,count\n0,0,1\n1,-1,0\n1,0,2\n1,1,0\n2,-2,0\n2,-1,1\n2,0,2\n2,1,1\n2,2,0\n");
  std::filesystem::remove(path);

  EXPECT_EQ(run({"table", "--stat", "crank", "--n-max", "2", "--output", "/nonexistent/dir/x.csv"}).code,
            2);
}

TEST(Cli, ThreadsFlag) {
  const auto a = run({"--threads", "3", "verify", "--check", "thm-1.5,thm-1.4", "--n-max", "50",
                      "--omit-timing"});
  const auto b = run({"verify", "--check", "thm-1.5,thm-1.4", "--n-max", "50", "--omit-timing"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"--threads", "0", "verify", "--check", "euler"}).code, 2);
}
