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

#include "ndcheck/runner.h"

#include <cerrno>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <system_error>
#include <utility>
#include <variant>
#include <vector>

namespace ndcheck {
namespace {

namespace fs = std::filesystem;

// A scratch directory that is removed again if we created it.
class ScratchDir {
 public:
  explicit ScratchDir(const std::optional<fs::path>& configured) {
    if (configured) {
      path_ = *configured;
      fs::create_directories(path_);
      return;
    }
    std::string templ = (fs::temp_directory_path() / "ndcheck-XXXXXX").string();
    if (mkdtemp(templ.data()) == nullptr) {
      throw fs::filesystem_error("cannot create scratch directory", templ,
                                 std::error_code(errno, std::generic_category()));
    }
    path_ = templ;
    owned_ = true;
  }
  ~ScratchDir() {
    if (owned_) {
      std::error_code ec;
      fs::remove_all(path_, ec);
    }
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
  bool owned_ = false;
};

void AddLabels(const Outcome& o, std::map<std::string, std::size_t>& labels) {
  for (const auto& l : o.labels) ++labels[l];
}

std::string FailureArguments(const std::string& arguments, const Outcome& o) {
  if (o.witness.empty()) return arguments;
  if (arguments.empty()) return o.witness;
  return arguments + " " + o.witness;
}

// Verdict of a property evaluated once, without parameters.
void RunOnce(const Prop& prop, const EvalContext& ctx, TestResult& r) {
  Outcome o;
  try {
    o = prop.Evaluate(ctx);
  } catch (const std::exception& e) {
    r.verdict = verdict::Error{std::string("exception: ") + e.what()};
    return;
  }
  switch (o.status) {
    case Status::kSatisfied:
      r.executed = 1;
      AddLabels(o, r.labels);
      r.verdict = verdict::Passed{1};
      return;
    case Status::kDropped:
      r.dropped = 1;
      r.verdict = verdict::Exhausted{0};
      return;
    case Status::kFalsified:
      r.executed = 1;
      AddLabels(o, r.labels);
      r.verdict = verdict::Falsified{1, FailureArguments("", o), o.results};
      return;
    case Status::kInconclusive:
      r.executed = 1;
      r.verdict = verdict::Error{"inconclusive: " + o.diagnosis};
      return;
  }
}

TestResult Skeleton(const TestSpec& spec) {
  TestResult r;
  r.name = spec.name;
  r.module = spec.module;
  r.line = spec.line;
  return r;
}

}  // namespace

bool IsSuccess(const Verdict& v) {
  if (const auto* e = std::get_if<verdict::Exhausted>(&v)) return e->executed > 0;
  return std::holds_alternative<verdict::Passed>(v) ||
         std::holds_alternative<verdict::PassedExhaustive>(v) ||
         std::holds_alternative<verdict::SkippedProved>(v);
}

std::size_t TestReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += IsSuccess(r.verdict) ? 0 : 1;
  return n;
}

int TestReport::ExitStatus() const { return failures() == 0 ? 0 : 1; }

const TestResult* TestReport::Find(std::string_view name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

TestResult RunParam(const ParamTest& param, const RunConfig& cfg,
                    const EvalContext& ctx) {
  TestResult r;
  std::unique_ptr<CaseSource> source = param.open(cfg.strategy());
  while (true) {
    if (r.executed == cfg.max_tests) {
      // A domain with exactly max_tests inputs is still reported exhaustive.
      bool exhaustive = false;
      try {
        exhaustive = !source->Next() && source->exhausted();
      } catch (const std::exception&) {
      }
      if (exhaustive) {
        r.verdict = verdict::PassedExhaustive{r.executed};
      } else {
        r.verdict = verdict::Passed{r.executed};
      }
      return r;
    }
    if (r.dropped == cfg.drop_limit) {
      r.verdict = verdict::Exhausted{r.executed};
      return r;
    }
    std::optional<Case> c;
    try {
      c = source->Next();
    } catch (const std::exception& e) {
      r.verdict = verdict::Error{std::string("exception while generating input: ") +
                                 e.what()};
      return r;
    }
    if (!c) {
      if (source->exhausted() && r.executed > 0) {
        r.verdict = verdict::PassedExhaustive{r.executed};
      } else {
        r.verdict = verdict::Exhausted{r.executed};
      }
      return r;
    }
    // Each drawn input gets a fresh share of the node budget.
    source->GrantBudget(cfg.node_budget);

    Outcome o;
    try {
      o = c->prop.Evaluate(ctx);
    } catch (const std::exception& e) {
      ++r.executed;
      r.verdict = verdict::Error{"exception for arguments " + c->arguments + ": " +
                                 e.what()};
      r.counterexample = std::move(c->input);
      return r;
    }
    switch (o.status) {
      case Status::kDropped:
        ++r.dropped;
        break;
      case Status::kSatisfied:
        ++r.executed;
        AddLabels(o, r.labels);
        break;
      case Status::kFalsified:
        ++r.executed;
        AddLabels(o, r.labels);
        r.verdict = verdict::Falsified{r.executed, FailureArguments(c->arguments, o),
                                       o.results};
        r.counterexample = std::move(c->input);
        return r;
      case Status::kInconclusive:
        ++r.executed;
        r.verdict = verdict::Error{"inconclusive for arguments " + c->arguments +
                                   ": " + o.diagnosis};
        r.counterexample = std::move(c->input);
        return r;
    }
  }
}

std::optional<TestSpec> InstantiatePoly(const TestSpec& spec,
                                        const RunConfig& cfg) {
  const auto* poly = std::get_if<PolyTest>(&spec.kind);
  if (poly == nullptr) return std::nullopt;
  auto it = poly->instances.find(cfg.default_base_type);
  if (it == poly->instances.end()) return std::nullopt;
  TestSpec out = spec;
  out.name = spec.name + "_ON_BASETYPE";
  out.kind = it->second;
  return out;
}

TestReport RunSuite(const std::vector<TestSpec>& specs, const RunConfig& cfg) {
  EvalContext ctx;
  ctx.strategy = cfg.strategy();
  ctx.operand_strategy = Strategy::BreadthFirst(cfg.node_budget);
  ctx.value_budget = cfg.value_budget;
  ctx.for_all_limit = cfg.max_tests;

  std::optional<ScratchDir> scratch;
  for (const auto& spec : specs) {
    if (std::holds_alternative<IoTest>(spec.kind) && !spec.proof_file) {
      scratch.emplace(cfg.scratch_dir);
      ctx.scratch_dir = scratch->path();
      break;
    }
  }

  TestReport report;
  report.results.reserve(specs.size());
  for (const auto& spec : specs) {
    if (spec.proof_file) {
      TestResult r = Skeleton(spec);
      r.verdict = verdict::SkippedProved{*spec.proof_file};
      report.results.push_back(std::move(r));
      continue;
    }
    if (const auto* unit = std::get_if<UnitTest>(&spec.kind)) {
      TestResult r = Skeleton(spec);
      RunOnce(unit->prop, ctx, r);
      report.results.push_back(std::move(r));
    } else if (const auto* io = std::get_if<IoTest>(&spec.kind)) {
      TestResult r = Skeleton(spec);
      RunOnce(io->prop, ctx, r);
      report.results.push_back(std::move(r));
    } else if (const auto* param = std::get_if<ParamTest>(&spec.kind)) {
      TestResult r = RunParam(*param, cfg, ctx);
      TestResult s = Skeleton(spec);
      r.name = s.name;
      r.module = s.module;
      r.line = s.line;
      report.results.push_back(std::move(r));
    } else {
      std::optional<TestSpec> inst = InstantiatePoly(spec, cfg);
      if (!inst) {
        TestResult r = Skeleton(spec);
        r.name += "_ON_BASETYPE";
        r.verdict = verdict::Error{"no instance for base type " +
                                   std::string(BaseTypeName(cfg.default_base_type))};
        report.results.push_back(std::move(r));
        continue;
      }
      TestResult r = RunParam(std::get<ParamTest>(inst->kind), cfg, ctx);
      r.name = inst->name;
      r.module = inst->module;
      r.line = inst->line;
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

TestSpec Property(std::string name, std::string module, std::optional<int> line,
                  ParamTest param) {
  return {std::move(name), std::move(module), line, std::move(param),
          Origin::kUserDefined, std::nullopt};
}

TestSpec Property(std::string name, std::string module, std::optional<int> line,
                  PolyTest poly) {
  return {std::move(name), std::move(module), line, std::move(poly),
          Origin::kUserDefined, std::nullopt};
}

TestSpec UnitProperty(std::string name, std::string module,
                      std::optional<int> line, Prop prop) {
  return {std::move(name), std::move(module), line, UnitTest{std::move(prop)},
          Origin::kUserDefined, std::nullopt};
}

TestSpec IoProperty(std::string name, std::string module,
                    std::optional<int> line, Prop prop) {
  return {std::move(name), std::move(module), line, IoTest{std::move(prop)},
          Origin::kUserDefined, std::nullopt};
}

}  // namespace ndcheck
