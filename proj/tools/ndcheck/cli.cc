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

#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ndcheck/contracts.h"

namespace ndcheck::cli {
namespace {

std::map<std::string, BaseType> BaseTypeChoices() {
  std::map<std::string, BaseType> m;
  for (BaseType t : kAllBaseTypes) m.emplace(std::string(BaseTypeName(t)), t);
  return m;
}

std::map<std::string, StrategyKind> StrategyChoices() {
  std::map<std::string, StrategyKind> m;
  for (auto k : {StrategyKind::kBreadthFirst, StrategyKind::kLevelDiagonal,
                 StrategyKind::kRandomLevelDiagonal}) {
    m.emplace(std::string(StrategyName(k)), k);
  }
  return m;
}

}  // namespace

RunConfig ToRunConfig(const CliOptions& opts) {
  RunConfig cfg;
  cfg.max_tests = opts.maxtests;
  cfg.drop_limit = opts.droplimit;
  cfg.default_base_type = opts.deftype;
  cfg.strategy_kind = opts.strategy;
  cfg.seed = opts.seed;
  cfg.node_budget = opts.nodebudget;
  cfg.value_budget = opts.valuebudget;
  cfg.proof_dir = opts.proofdir;
  cfg.selection = opts.modules;
  return cfg;
}

CliOptions FromRunConfig(const RunConfig& cfg, const CliOptions& presentation) {
  CliOptions opts = presentation;
  opts.modules = cfg.selection;
  opts.maxtests = cfg.max_tests;
  opts.droplimit = cfg.drop_limit;
  opts.deftype = cfg.default_base_type;
  opts.strategy = cfg.strategy_kind;
  opts.seed = cfg.seed;
  opts.nodebudget = cfg.node_budget;
  opts.valuebudget = cfg.value_budget;
  opts.proofdir = cfg.proof_dir;
  return opts;
}

int ExitCodeFor(const TestReport& report) {
  return report.failures() == 0 ? kExitOk : kExitFailure;
}

std::string ListTests(const SuiteRegistry& registry,
                      const std::vector<std::string>& selection) {
  std::vector<std::string> suites = selection.empty() ? registry.Names() : selection;
  std::string out;
  for (const auto& suite : suites) {
    for (const auto& spec : registry.Specs(suite)) {
      out += spec.name + " (module " + spec.module;
      if (spec.line) out += ", line " + std::to_string(*spec.line);
      out += ") " + std::string(KindName(spec.kind)) + " " +
             std::string(OriginName(spec.origin)) + "\n";
    }
  }
  return out;
}

EnvLookup ProcessEnv() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
}

std::optional<int> ParseArgs(int argc, const char* const* argv, const EnvLookup& env,
                             CliOptions& opts, std::ostream& out, std::ostream& err) {
  CLI::App app{"Property-based testing with systematic enumeration of test data",
               "ndcheck"};
  app.add_option("modules", opts.modules, "Test suites to run");
  const CLI::Range positive(std::size_t{1}, std::numeric_limits<std::size_t>::max());
  app.add_option("--maxtests", opts.maxtests, "Tests per property")->check(positive);
  app.add_option("--droplimit", opts.droplimit,
                 "Inputs a conditional property may drop before giving up")
      ->check(positive);
  app.add_option("--deftype", opts.deftype,
                 "Base type for polymorphic properties: ordering, bool, int, char")
      ->transform(CLI::CheckedTransformer(BaseTypeChoices()))
      ->option_text("ordering|bool|int|char");
  app.add_option("--strategy", opts.strategy,
                 "Enumeration strategy: bfs, diag, rdiag")
      ->transform(CLI::CheckedTransformer(StrategyChoices()))
      ->option_text("bfs|diag|rdiag");
  auto* seed = app.add_option("--seed", opts.seed,
                              "Seed of the randomized strategy (default: "
                              "$NDCHECK_SEED or 0)");
  app.add_option("--nodebudget", opts.nodebudget,
                 "Tree node expansions per enumeration")
      ->check(positive);
  app.add_option("--valuebudget", opts.valuebudget,
                 "Values drawn per operand of a property")
      ->check(positive);
  app.add_option("--proofdir", opts.proofdir,
                 "Directory with proof-<property>.* files; proved properties "
                 "are skipped");
  std::string format = "text";
  app.add_option("--format", format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->option_text("text|json");
  app.add_flag("--list", opts.list_only, "List the selected tests without running them");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  opts.format = *ParseReportFormat(format);
  if (seed->count() == 0) {
    if (auto s = env("NDCHECK_SEED")) {
      try {
        std::size_t used = 0;
        opts.seed = std::stoull(*s, &used, 0);
        if (used != s->size()) throw std::invalid_argument(*s);
      } catch (const std::exception&) {
        err << "ndcheck: NDCHECK_SEED is not an unsigned integer: " << *s << "\n";
        return kExitUsage;
      }
    }
  }
  return std::nullopt;
}

int Main(int argc, const char* const* argv, const SuiteRegistry& registry,
         std::ostream& out, std::ostream& err, const EnvLookup& env) {
  CliOptions opts;
  if (auto code = ParseArgs(argc, argv, env, opts, out, err)) return *code;
  for (const auto& m : opts.modules) {
    if (!registry.Contains(m)) {
      err << "ndcheck: unknown suite '" << m << "'\n";
      return kExitUsage;
    }
  }
  try {
    if (opts.list_only) {
      out << ListTests(registry, opts.modules);
      return kExitOk;
    }
    if (opts.modules.empty()) {
      err << "ndcheck: no suite given (use --list to see them)\n";
      return kExitUsage;
    }
    const RunConfig cfg = ToRunConfig(opts);
    std::vector<TestSpec> specs;
    for (const auto& m : opts.modules) {
      for (auto& s : registry.Specs(m)) specs.push_back(std::move(s));
    }
    if (cfg.proof_dir) specs = ApplyProofs(std::move(specs), ScanProofs(*cfg.proof_dir));
    if (opts.format == ReportFormat::kText) out << "Executing all tests...\n" << std::flush;
    const TestReport report = RunSuite(specs, cfg);
    out << RenderReport(report, opts.format);
    return ExitCodeFor(report);
  } catch (const ConfigError& e) {
    err << "ndcheck: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RegistrationError& e) {
    err << "ndcheck: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ndcheck::cli
