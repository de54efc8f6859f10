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

#ifndef NDCHECK_RUNNER_H_
#define NDCHECK_RUNNER_H_

#include <any>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "ndcheck/enumerate.h"
#include "ndcheck/gen.h"
#include "ndcheck/prop.h"
#include "ndcheck/show.h"

namespace ndcheck {

// One drawn input of a parameterized property.
struct Case {
  std::string arguments;
  std::any input;
  Prop prop;
};

// A lazily enumerated stream of test cases.
class CaseSource {
 public:
  virtual ~CaseSource() = default;
  virtual std::optional<Case> Next() = 0;
  // The input domain was enumerated completely.
  virtual bool exhausted() const = 0;
  virtual bool budget_exceeded() const = 0;
  virtual void GrantBudget(std::size_t extra) = 0;
};

// A property parameterized over generated inputs, with the input type erased.
struct ParamTest {
  std::string input_name;
  std::function<std::unique_ptr<CaseSource>(const Strategy&)> open;
  // Rebuilds the property for an input previously stored in Case::input.
  std::function<Prop(const std::any&)> body;
};

struct UnitTest {
  Prop prop;
};

// A property using Returns(); evaluated once, in registration order.
struct IoTest {
  Prop prop;
};

// A polymorphic property, instantiated per base type.
struct PolyTest {
  std::map<BaseType, ParamTest> instances;
};

using TestKind = std::variant<UnitTest, ParamTest, PolyTest, IoTest>;

enum class Origin { kUserDefined, kContractSynthesized };

struct TestSpec {
  std::string name;
  std::string module;
  std::optional<int> line;
  TestKind kind;
  Origin origin = Origin::kUserDefined;
  // Set when a proof file covers this property; the test is then skipped.
  std::optional<std::string> proof_file;
};

std::string_view KindName(const TestKind& kind);
std::string_view OriginName(Origin origin);

namespace internal {

template <typename A>
class GeneratorCases final : public CaseSource {
 public:
  GeneratorCases(const Generator<A>& gen, const Strategy& strategy,
                 std::function<Prop(const A&)> body,
                 std::function<std::string(const A&)> render)
      : enumerator_(gen.tree, strategy),
        body_(std::move(body)),
        render_(std::move(render)) {}

  std::optional<Case> Next() override {
    auto v = enumerator_.Next();
    if (!v) return std::nullopt;
    std::string arguments = render_(*v);
    Prop prop = body_(*v);
    return Case{std::move(arguments), std::any(std::move(*v)), std::move(prop)};
  }
  bool exhausted() const override { return enumerator_.exhausted(); }
  bool budget_exceeded() const override { return enumerator_.budget_exceeded(); }
  void GrantBudget(std::size_t extra) override { enumerator_.GrantBudget(extra); }

 private:
  Enumerator<A> enumerator_;
  std::function<Prop(const A&)> body_;
  std::function<std::string(const A&)> render_;
};

template <typename A>
ParamTest MakeParamImpl(Generator<A> gen, std::function<Prop(const A&)> body,
                        std::function<std::string(const A&)> render) {
  ParamTest p;
  p.input_name = gen.name;
  p.open = [gen, body, render](const Strategy& s) -> std::unique_ptr<CaseSource> {
    return std::make_unique<GeneratorCases<A>>(gen, s, body, render);
  };
  p.body = [body](const std::any& input) {
    return body(std::any_cast<const A&>(input));
  };
  return p;
}

}  // namespace internal

// A property with one parameter drawn from `gen`.
template <typename A, typename F>
ParamTest MakeParam(Generator<A> gen, F body) {
  return internal::MakeParamImpl<A>(
      std::move(gen), std::function<Prop(const A&)>(std::move(body)),
      [](const A& a) { return ShowValue(a); });
}

// Properties with two or three parameters. Inputs are drawn from the tuple
// generator of the arguments, so every combination is reached.
template <typename A1, typename A2, typename F>
ParamTest MakeParam(Generator<A1> g1, Generator<A2> g2, F body) {
  using T = std::tuple<A1, A2>;
  return internal::MakeParamImpl<T>(
      TupleOf(g1, g2),
      [body = std::move(body)](const T& t) { return std::apply(body, t); },
      [](const T& t) { return ShowArguments(t); });
}

template <typename A1, typename A2, typename A3, typename F>
ParamTest MakeParam(Generator<A1> g1, Generator<A2> g2, Generator<A3> g3,
                    F body) {
  using T = std::tuple<A1, A2, A3>;
  return internal::MakeParamImpl<T>(
      TupleOf(g1, g2, g3),
      [body = std::move(body)](const T& t) { return std::apply(body, t); },
      [](const T& t) { return ShowArguments(t); });
}

template <typename T>
struct TypeTag {
  using type = T;
};

// Builds a PolyTest from a generic factory invoked with TypeTag<Ordering>,
// TypeTag<bool>, TypeTag<Int>, and TypeTag<char>.
template <typename F>
PolyTest MakePoly(F factory) {
  PolyTest p;
  p.instances.emplace(BaseType::kOrdering, factory(TypeTag<Ordering>{}));
  p.instances.emplace(BaseType::kBool, factory(TypeTag<bool>{}));
  p.instances.emplace(BaseType::kInt, factory(TypeTag<Int>{}));
  p.instances.emplace(BaseType::kChar, factory(TypeTag<char>{}));
  return p;
}

struct RunConfig {
  std::size_t max_tests = 100;
  std::size_t drop_limit = 10'000;
  BaseType default_base_type = BaseType::kOrdering;
  StrategyKind strategy_kind = StrategyKind::kRandomLevelDiagonal;
  std::uint64_t seed = 0;
  std::size_t node_budget = kDefaultNodeBudget;
  std::size_t value_budget = kDefaultValueBudget;
  std::optional<std::filesystem::path> proof_dir;
  std::vector<std::string> selection;
  // IO tests write here. A fresh temporary directory is used when unset.
  std::optional<std::filesystem::path> scratch_dir;

  Strategy strategy() const { return {strategy_kind, seed, node_budget}; }
};

namespace verdict {
struct Passed {
  std::size_t tests;
};
struct PassedExhaustive {
  std::size_t tests;
};
struct Falsified {
  std::size_t case_index;
  std::string arguments;
  std::string results;
};
// Inputs ran out (drop limit or input domain) before max_tests executed.
struct Exhausted {
  std::size_t executed;
};
struct SkippedProved {
  std::string proof_file;
};
struct Error {
  std::string message;
};
}  // namespace verdict

using Verdict =
    std::variant<verdict::Passed, verdict::PassedExhaustive, verdict::Falsified,
                 verdict::Exhausted, verdict::SkippedProved, verdict::Error>;

std::string_view VerdictName(const Verdict& v);

// Passed, PassedExhaustive, SkippedProved, and Exhausted with at least one
// executed test count as success.
bool IsSuccess(const Verdict& v);

struct TestResult {
  std::string name;
  std::string module;
  std::optional<int> line;
  Verdict verdict;
  std::size_t executed = 0;
  std::size_t dropped = 0;
  std::map<std::string, std::size_t> labels;
  // The falsifying input, for re-evaluation through ParamTest::body.
  std::any counterexample;
};

struct TestReport {
  std::vector<TestResult> results;

  std::size_t failures() const;
  // 0 when every verdict is a success, 1 otherwise.
  int ExitStatus() const;
  const TestResult* Find(std::string_view name) const;
};

// Draws inputs, evaluates the body, and applies the max_tests/drop_limit
// accounting. Dropped cases do not count as executed, and the falsifying
// case index counts executed cases only.
TestResult RunParam(const ParamTest& param, const RunConfig& cfg,
                    const EvalContext& ctx);

// The instantiation for cfg.default_base_type, renamed <name>_ON_BASETYPE.
// Returns nullopt when the spec is not a PolyTest or lacks that instance.
std::optional<TestSpec> InstantiatePoly(const TestSpec& spec,
                                        const RunConfig& cfg);

// Runs every spec and reports verdicts in registration order.
TestReport RunSuite(const std::vector<TestSpec>& specs, const RunConfig& cfg);

// Convenience builders.
TestSpec Property(std::string name, std::string module, std::optional<int> line,
                  ParamTest param);
TestSpec Property(std::string name, std::string module, std::optional<int> line,
                  PolyTest poly);
TestSpec UnitProperty(std::string name, std::string module,
                      std::optional<int> line, Prop prop);
TestSpec IoProperty(std::string name, std::string module,
                    std::optional<int> line, Prop prop);

}  // namespace ndcheck

#endif  // NDCHECK_RUNNER_H_
