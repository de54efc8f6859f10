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

#ifndef NDCHECK_TOOLS_CLI_H_
#define NDCHECK_TOOLS_CLI_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ndcheck/gen.h"
#include "ndcheck/registry.h"
#include "ndcheck/report.h"
#include "ndcheck/runner.h"

namespace ndcheck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CliOptions {
  std::vector<std::string> modules;
  std::size_t maxtests = 100;
  std::size_t droplimit = 10'000;
  BaseType deftype = BaseType::kOrdering;
  StrategyKind strategy = StrategyKind::kRandomLevelDiagonal;
  std::uint64_t seed = 0;
  std::size_t nodebudget = kDefaultNodeBudget;
  std::size_t valuebudget = kDefaultValueBudget;
  std::optional<std::filesystem::path> proofdir;
  ReportFormat format = ReportFormat::kText;
  bool list_only = false;

  friend bool operator==(const CliOptions&, const CliOptions&) = default;
};

RunConfig ToRunConfig(const CliOptions& opts);
// The inverse of ToRunConfig for the fields a RunConfig carries. The
// presentation fields (format, list_only) are taken from `presentation`.
CliOptions FromRunConfig(const RunConfig& cfg, const CliOptions& presentation = {});

// Exit status for a finished run: 0 iff every verdict is a success.
int ExitCodeFor(const TestReport& report);

// One line per spec of the selected suites (all suites when empty):
//   name (module M, line L) kind origin
std::string ListTests(const SuiteRegistry& registry,
                      const std::vector<std::string>& selection);

// Looks up an environment variable; injectable for tests.
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

EnvLookup ProcessEnv();

// Parses argv into options. Returns the exit code to use instead when
// parsing ends the program (help, usage errors); messages go to `out`/`err`.
std::optional<int> ParseArgs(int argc, const char* const* argv, const EnvLookup& env,
                             CliOptions& opts, std::ostream& out, std::ostream& err);

// The whole command: parse, select suites, run, print, and return the exit
// code.
int Main(int argc, const char* const* argv, const SuiteRegistry& registry,
         std::ostream& out, std::ostream& err, const EnvLookup& env = ProcessEnv());

}  // namespace ndcheck::cli

#endif  // NDCHECK_TOOLS_CLI_H_
