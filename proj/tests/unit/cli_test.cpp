#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.hpp"

namespace resproc::testing {
namespace {

const std::vector<std::string> kSubcommands = {
    "transfer", "ratio",     "maxpath",  "maxcycle", "maxsegment", "mst-offers", "avgfree", "rotsort1", "rotsort2",
    "swapsort", "cyclesort", "circsort", "adjswaps", "group",      "movesort",   "sets",    "toggle"};

TEST(CliFixtures, GoldenOutputIsByteExact) {
  const auto corpus = load_fixtures(RESPROC_FIXTURE_DIR);
  ASSERT_GE(corpus.size(), 60u);
  for (const Fixture& f : corpus) {
    SCOPED_TRACE(f.name);
    const CliRun r = run_cli(f.args, f.input);
    EXPECT_EQ(r.code, f.expected_code);
    EXPECT_EQ(r.out, f.expected);
  }
}

TEST(CliFixtures, OracleNeverDisagrees) {
  for (const Fixture& f : load_fixtures(RESPROC_FIXTURE_DIR)) {
    SCOPED_TRACE(f.name);
    const CliRun r = run_cli(with_oracle(f.args), f.input);
    EXPECT_EQ(r.code, f.expected_code) << r.err;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}, "").code, 64);
  EXPECT_EQ(run_cli({"frobnicate"}, "").code, 64);
  EXPECT_EQ(run_cli({"ratio", "--prop", "bogus"}, "").code, 64);
  EXPECT_EQ(run_cli({"--format", "xml", "avgfree"}, "").code, 64);
  const CliRun help = run_cli({"--help"}, "");
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("toggle"), std::string::npos);
}

TEST(Cli, MalformedInputIsAValidationError) {
  const CliRun r = run_cli({"avgfree"}, "{\"n\": ");
  EXPECT_EQ(r.code, 2);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["error"], "validation");
  EXPECT_EQ(run_cli({"avgfree"}, "{}").code, 2);
  EXPECT_EQ(run_cli({"avgfree"}, "{\"n\":\"four\"}").code, 2);
  EXPECT_EQ(run_cli({"sets", "--mode", "splitfind"}, "S 1 2 A B\n").code, 2);
  EXPECT_EQ(run_cli({"sets"}, "N 3\nU 1 9 L\n").code, 2);
}

TEST(Cli, PlainFormat) {
  const CliRun r = run_cli({"--format", "plain", "movesort"}, "{\"p\":[2,1]}");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "total_cost 3\n");
  const CliRun sets = run_cli({"--format", "json", "sets", "--mode", "splitfind"}, "N 5 C0\nS 1 2 A B\nC 3\n");
  EXPECT_EQ(sets.out, "{\"answers\":[\"B\"]}\n");
}

TEST(Cli, StrictOnlyAffectsTypedFailures) {
  const std::string ok = "{\"n\":1,\"s\":1,\"d\":1,\"T\":5,\"edges\":[]}";
  EXPECT_EQ(run_cli({"--strict", "transfer"}, ok).code, 0);
  EXPECT_EQ(run_cli({"--strict", "mst-offers"}, "{\"n\":2,\"q\":0,\"edges\":[]}").code, 3);
  EXPECT_EQ(run_cli({"mst-offers"}, "{\"n\":2,\"q\":0,\"edges\":[]}").code, 0);
}

TEST(CliSeed, OutputIsDeterministic) {
  for (const std::string& cmd : kSubcommands) {
    SCOPED_TRACE(cmd);
    for (const char* seed : {"1", "17", "123456789"}) {
      const CliRun a = run_cli({"--seed", seed, cmd}, "");
      const CliRun b = run_cli({"--seed", seed, cmd}, "");
      EXPECT_EQ(a.code, 0) << a.out << a.err;
      EXPECT_EQ(a.out, b.out);
    }
    EXPECT_NE(run_cli({"--seed", "1", cmd}, "").out, run_cli({"--seed", "2", cmd}, "").out);
  }
}

TEST(CliSeed, FuzzWithOracleAndVerify) {
  const std::vector<std::vector<std::string>> variants = {
      {"ratio", "--prop", "one-item"}, {"ratio", "--prop", "path"},       {"ratio", "--prop", "cycle"},
      {"ratio", "--prop", "segment"},  {"ratio", "--objective", "min"},   {"sets", "--mode", "offline"},
      {"sets", "--mode", "online-comm", "--agg", "max"}, {"sets", "--mode", "splitfind"},
      {"group", "--method", "sjt"},    {"rotsort1", "--case", "2"},       {"avgfree", "--method", "memoized"}};
  std::vector<std::vector<std::string>> all = variants;
  for (const std::string& cmd : kSubcommands) all.push_back({cmd});
  for (const auto& tail : all) {
    for (int seed = 1; seed <= 40; ++seed) {
      std::vector<std::string> args = {"--oracle", "--verify", "--seed", std::to_string(seed)};
      args.insert(args.end(), tail.begin(), tail.end());
      const CliRun r = run_cli(args, "");
      ASSERT_EQ(r.code, 0) << tail.front() << " seed " << seed << "\n" << r.out << r.err;
    }
  }
}

TEST(CliSeed, InstanceRoundTrips) {
  // The echoed instance, fed back on stdin, reproduces the same answer.
  for (const char* cmd : {"transfer", "mst-offers", "cyclesort", "toggle", "group"}) {
    auto doc = nlohmann::ordered_json::parse(run_cli({"--seed", "9", cmd}, "").out);
    const std::string instance = doc["instance"].dump();
    doc.erase("instance");
    EXPECT_EQ(run_cli({cmd}, instance).out, doc.dump() + "\n") << cmd;
  }
}

}  // namespace
}  // namespace resproc::testing
