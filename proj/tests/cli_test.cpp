#include "cli.hpp"

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

namespace broomrank::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "broomrank");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliRank, PlainOutput) {
  auto r = invoke({"rank", "--m", "3", "--p", "2", "--n", "2", "--q", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 2 3 6 10 11 10 11 10 5 1\n");
  EXPECT_NE(r.err.find("m=3 p=2 n=2 q=3"), std::string::npos);

  EXPECT_EQ(invoke({"rank", "--m", "1", "--p", "0", "--n", "1", "--q", "0"}).out, "1 2 1\n");
  EXPECT_EQ(invoke({"rank", "--m", "2", "--p", "1", "--n", "1", "--q", "1", "--method", "oracle"}).out,
            "1 2 4 4 3 1\n");
  EXPECT_EQ(invoke({"rank", "--m", "2", "--p", "1", "--n", "1", "--q", "1", "--method", "conv"}).out,
            "1 2 4 4 3 1\n");
}

TEST(CliRank, EchoesCanonicalSwap) {
  auto r = invoke({"rank", "--m", "2", "--p", "3", "--n", "3", "--q", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["canonical"]["m"], 3);
  EXPECT_EQ(doc["canonical"]["p"], 2);
  EXPECT_EQ(doc["rank"].size(), 11u);
  EXPECT_EQ(doc["rank"][5], "11");
}

TEST(CliRank, CsvHasHeader) {
  auto r = invoke({"rank", "--m", "1", "--p", "0", "--n", "1", "--q", "0", "--format", "csv"});
  EXPECT_EQ(r.out, "i,r\n1,1\n2,2\n3,1\n");
}

TEST(CliRank, BadInputExitsTwo) {
  EXPECT_EQ(invoke({"rank", "--m", "0", "--p", "0", "--n", "1", "--q", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"rank", "--m", "1", "--p", "-1", "--n", "1", "--q", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"rank", "--m", "1", "--n", "1", "--q", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"rank", "--m", "1", "--p", "0", "--n", "1", "--q", "0", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliClassify, ExitCodesAndText) {
  auto fig = invoke({"classify", "--m", "3", "--p", "2", "--n", "2", "--q", "3"});
  EXPECT_EQ(fig.code, kExitNotUnimodal);
  EXPECT_EQ(fig.out, "not-unimodal witness=(6,7,8)\n");

  auto two = invoke({"classify", "--m", "2", "--p", "5", "--n", "2", "--q", "9"});
  EXPECT_EQ(two.code, kExitOk);
  EXPECT_EQ(two.out, "unimodal condition=iii\n");

  auto first = invoke({"classify", "--m", "4", "--p", "1", "--n", "3", "--q", "2"});
  EXPECT_EQ(first.code, kExitOk);
  EXPECT_EQ(first.out, "unimodal condition=i\n");
}

TEST(CliClassify, Json) {
  auto r = invoke({"classify", "--m", "3", "--p", "2", "--n", "2", "--q", "3", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_FALSE(doc["unimodal"].get<bool>());
  EXPECT_EQ(doc["condition"], "none");
  EXPECT_EQ(doc["witness"], nlohmann::json::array({6, 7, 8}));
}

TEST(CliEnumerate, NonUnimodalOnEleven) {
  auto r = invoke({"enumerate", "--i", "11", "--non-unimodal"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "m=3 p=2 n=2 q=3\n");
  EXPECT_EQ(invoke({"enumerate", "--i", "10", "--non-unimodal"}).out, "");
  auto csv = invoke({"enumerate", "--i", "4", "--format", "csv"});
  EXPECT_EQ(csv.out, "m,p,n,q\n1,0,1,1\n2,0,1,0\n");
  EXPECT_EQ(invoke({"enumerate", "--i", "1"}).code, kExitUsage);
}

TEST(CliCount, CsvReproducesBRow) {
  auto r = invoke({"count", "--max-i", "22", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "i,a,b_closed,b_recursive,b_brute,t_brute,t_trees,t_table,b_agree,t_status");
  std::vector<std::string> b_values;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    ASSERT_GE(cells.size(), 10u);
    if (std::stoi(cells[0]) >= 10) b_values.push_back(cells[2]);
    EXPECT_EQ(cells[8], "yes");
  }
  EXPECT_EQ(b_values, (std::vector<std::string>{"0", "1", "2", "5", "7", "12", "16", "24", "30", "41", "50",
                                                "65", "77"}));
  EXPECT_NE(r.err.find("t_19"), std::string::npos);
}

TEST(CliCount, SmallRangeAllZeroAndJsonParses) {
  auto r = invoke({"count", "--max-i", "9", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 9u);
  for (const auto& row : doc["rows"]) EXPECT_EQ(row["b_closed"], 0);
}

TEST(CliCount, BoundsAndEnvironment) {
  EXPECT_EQ(invoke({"count", "--max-i", "41"}).code, kExitUsage);
  ::setenv("BROOMRANK_MAX_I", "12", 1);
  EXPECT_EQ(invoke({"count", "--max-i", "13"}).code, kExitUsage);
  EXPECT_EQ(invoke({"count", "--max-i", "12"}).code, kExitOk);
  ::setenv("BROOMRANK_MAX_I", "nonsense", 1);
  EXPECT_EQ(invoke({"count", "--max-i", "5"}).code, kExitUsage);
  ::unsetenv("BROOMRANK_MAX_I");
}

TEST(CliBfile, StrictlyIncreasingIndexValueLines) {
  auto r = invoke({"count", "--max-i", "12", "--format", "bfile"});
  EXPECT_NE(r.out.find("\n11 1\n"), std::string::npos);

  auto t = invoke({"bfile", "--seq", "t", "--min-i", "3", "--max-i", "13"});
  ASSERT_EQ(t.code, 0);
  std::istringstream lines(t.out);
  long previous = -1;
  int rows = 0;
  for (long index, value; lines >> index >> value; ++rows) {
    EXPECT_GT(index, previous);
    previous = index;
  }
  EXPECT_EQ(rows, 11);
  EXPECT_NE(t.out.find("10 60\n"), std::string::npos);

  auto shifted = invoke({"bfile", "--seq", "t", "--min-i", "3", "--max-i", "4", "--offset", "-3"});
  EXPECT_EQ(shifted.out, "0 1\n1 2\n");
  EXPECT_EQ(invoke({"bfile", "--seq", "b", "--max-i", "0"}).code, kExitUsage);
}

TEST(CliVerify, QuickPasses) {
  auto r = invoke({"verify", "--level", "quick", "--jobs", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS figure-one"), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.size() - 5), "PASS\n");
  auto json = invoke({"verify", "--format", "json"});
  EXPECT_TRUE(nlohmann::json::parse(json.out)["passed"].get<bool>());
}

}  // namespace
}  // namespace broomrank::cli
