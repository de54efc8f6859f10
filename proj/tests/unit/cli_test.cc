// Copyright 2026 The NondetCheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ndcheck/cli.h"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "ndcheck/corpus/corpus.h"
#include "ndcheck/prop.h"

namespace ndcheck::cli {
namespace {

EnvLookup FakeEnv(std::map<std::string, std::string> vars) {
  return [vars](const std::string& name) -> std::optional<std::string> {
    auto it = vars.find(name);
    if (it == vars.end()) return std::nullopt;
    return it->second;
  };
}

struct Parsed {
  std::optional<int> code;
  CliOptions opts;
  std::string out, err;
};

Parsed Parse(std::vector<const char*> args, const EnvLookup& env = FakeEnv({})) {
  args.insert(args.begin(), "ndcheck");
  Parsed p;
  std::ostringstream out, err;
  p.code = ParseArgs(static_cast<int>(args.size()), args.data(), env, p.opts, out, err);
  p.out = out.str();
  p.err = err.str();
  return p;
}

struct Ran {
  int code;
  std::string out, err;
};

Ran RunMain(std::vector<const char*> args, const SuiteRegistry& reg,
            const EnvLookup& env = FakeEnv({})) {
  args.insert(args.begin(), "ndcheck");
  std::ostringstream out, err;
  int code = Main(static_cast<int>(args.size()), args.data(), reg, out, err, env);
  return {code, out.str(), err.str()};
}

TEST(ParseArgsTest, Defaults) {
  auto p = Parse({"Rev"});
  EXPECT_FALSE(p.code);
  CliOptions expected;
  expected.modules = {"Rev"};
  EXPECT_EQ(p.opts, expected);
  EXPECT_EQ(p.opts.maxtests, 100u);
  EXPECT_EQ(p.opts.droplimit, 10000u);
  EXPECT_EQ(p.opts.deftype, BaseType::kOrdering);
  EXPECT_EQ(p.opts.strategy, StrategyKind::kRandomLevelDiagonal);
}

TEST(ParseArgsTest, AllOptions) {
  auto p = Parse({"--maxtests=7", "--droplimit", "9", "--deftype=int", "--strategy=bfs",
                  "--seed=42", "--nodebudget=1000", "--valuebudget=50",
                  "--proofdir=/tmp/p", "--format=json", "--list", "A", "B"});
  ASSERT_FALSE(p.code) << p.err;
  EXPECT_EQ(p.opts.modules, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(p.opts.maxtests, 7u);
  EXPECT_EQ(p.opts.droplimit, 9u);
  EXPECT_EQ(p.opts.deftype, BaseType::kInt);
  EXPECT_EQ(p.opts.strategy, StrategyKind::kBreadthFirst);
  EXPECT_EQ(p.opts.seed, 42u);
  EXPECT_EQ(p.opts.nodebudget, 1000u);
  EXPECT_EQ(p.opts.valuebudget, 50u);
  EXPECT_EQ(p.opts.proofdir, std::filesystem::path("/tmp/p"));
  EXPECT_EQ(p.opts.format, ReportFormat::kJsonLines);
  EXPECT_TRUE(p.opts.list_only);
}

TEST(ParseArgsTest, RejectsBadValues) {
  for (auto args : std::vector<std::vector<const char*>>{
           {"--maxtests=0", "Rev"},
           {"--maxtests=-3", "Rev"},
           {"--droplimit=x", "Rev"},
           {"--deftype=float", "Rev"},
           {"--strategy=dfs", "Rev"},
           {"--format=xml", "Rev"},
           {"--bogus", "Rev"}}) {
    auto p = Parse(args);
    EXPECT_EQ(p.code, kExitUsage) << args[0];
    EXPECT_FALSE(p.err.empty()) << args[0];
  }
}

TEST(ParseArgsTest, HelpExitsZero) {
  auto p = Parse({"--help"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_NE(p.out.find("--maxtests"), std::string::npos);
}

TEST(ParseArgsTest, SeedFromEnvironment) {
  auto env = FakeEnv({{"NDCHECK_SEED", "17"}});
  EXPECT_EQ(Parse({"Rev"}, env).opts.seed, 17u);
  // The flag wins over the environment.
  EXPECT_EQ(Parse({"--seed=3", "Rev"}, env).opts.seed, 3u);
  EXPECT_EQ(Parse({"Rev"}, FakeEnv({{"NDCHECK_SEED", "nope"}})).code, kExitUsage);
}

TEST(RunConfigTest, RoundTrip) {
  CliOptions o;
  o.modules = {"Rev", "Perm"};
  o.maxtests = 5;
  o.droplimit = 6;
  o.deftype = BaseType::kChar;
  o.strategy = StrategyKind::kLevelDiagonal;
  o.seed = 99;
  o.nodebudget = 123;
  o.valuebudget = 456;
  o.proofdir = "/p";
  o.format = ReportFormat::kJsonLines;
  RunConfig cfg = ToRunConfig(o);
  EXPECT_EQ(cfg.max_tests, 5u);
  EXPECT_EQ(cfg.strategy(), (Strategy{StrategyKind::kLevelDiagonal, 99, 123}));
  EXPECT_EQ(FromRunConfig(cfg, o), o);
}

TEST(ExitCodeTest, ZeroIffAllSucceed) {
  TestReport report;
  EXPECT_EQ(ExitCodeFor(report), 0);
  TestResult r;
  r.verdict = verdict::Passed{1};
  report.results.push_back(r);
  EXPECT_EQ(ExitCodeFor(report), 0);
  r.verdict = verdict::Exhausted{0};
  report.results.push_back(r);
  EXPECT_EQ(ExitCodeFor(report), 1);
}

SuiteRegistry Corpus() {
  SuiteRegistry reg;
  corpus::RegisterCorpus(reg);
  return reg;
}

TEST(ListTestsTest, ShowsKindAndOrigin) {
  auto reg = Corpus();
  std::string listing = ListTests(reg, {"Sort"});
  EXPECT_EQ(listing,
            "sortSatisfiesSpecification (module Sort, line 14) param ContractSynthesized\n"
            "sortSatisfiesPostCondition (module Sort, line 14) param ContractSynthesized\n"
            "sortlength (module Sort, line 18) param UserDefined\n");
  std::string all = ListTests(reg, {});
  EXPECT_NE(all.find("negOr (module BoolTest, line 4) param UserDefined"), std::string::npos);
  EXPECT_NE(all.find("writeReadFile (module IOTests, line 5) io UserDefined"),
            std::string::npos);
}

TEST(MainTest, RunsSelectedSuites) {
  SuiteRegistry reg;
  reg.Register("Good", [] {
    return std::vector<TestSpec>{UnitProperty("one", "Good", 1, IsEqual(1, 1))};
  });
  reg.Register("Bad", [] {
    return std::vector<TestSpec>{UnitProperty("two", "Bad", 2, IsEqual(1, 2))};
  });
  auto ok = RunMain({"Good"}, reg);
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "Executing all tests...\none (module Good, line 1):\n OK, passed 1 test.\n");
  auto bad = RunMain({"Good", "Bad"}, reg);
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("two (module Bad, line 2) failed"), std::string::npos);
  auto json = RunMain({"--format=json", "Good"}, reg);
  EXPECT_EQ(json.out.rfind("{\"name\":\"one\"", 0), 0u);
}

TEST(MainTest, UsageErrors) {
  auto reg = Corpus();
  EXPECT_EQ(RunMain({}, reg).code, kExitUsage);
  auto unknown = RunMain({"Rev", "Nope"}, reg);
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("unknown suite 'Nope'"), std::string::npos);
  EXPECT_TRUE(unknown.out.empty());
  auto proofs = RunMain({"--proofdir=/nonexistent/ndcheck", "Rev"}, reg);
  EXPECT_EQ(proofs.code, kExitUsage);
  EXPECT_NE(proofs.err.find("cannot read proof directory"), std::string::npos);
}

TEST(MainTest, SeedFlagAndEnvironmentAgree) {
  auto reg = Corpus();
  auto flag = RunMain({"--seed=5", "--format=json", "ConcDup"}, reg);
  auto env = RunMain({"--format=json", "ConcDup"}, reg, FakeEnv({{"NDCHECK_SEED", "5"}}));
  EXPECT_EQ(flag.out, env.out);
  EXPECT_EQ(flag.code, env.code);
}

}  // namespace
}  // namespace ndcheck::cli
