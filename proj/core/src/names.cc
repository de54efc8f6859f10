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

#include <optional>
#include <string_view>
#include <variant>

#include "ndcheck/enumerate.h"
#include "ndcheck/gen.h"
#include "ndcheck/prop.h"
#include "ndcheck/runner.h"

namespace ndcheck {

std::string_view StrategyName(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kBreadthFirst:
      return "bfs";
    case StrategyKind::kLevelDiagonal:
      return "diag";
    case StrategyKind::kRandomLevelDiagonal:
      return "rdiag";
  }
  return "?";
}

std::optional<StrategyKind> ParseStrategyName(std::string_view name) {
  if (name == "bfs") return StrategyKind::kBreadthFirst;
  if (name == "diag") return StrategyKind::kLevelDiagonal;
  if (name == "rdiag") return StrategyKind::kRandomLevelDiagonal;
  return std::nullopt;
}

std::string_view BaseTypeName(BaseType t) {
  switch (t) {
    case BaseType::kOrdering:
      return "ordering";
    case BaseType::kBool:
      return "bool";
    case BaseType::kInt:
      return "int";
    case BaseType::kChar:
      return "char";
  }
  return "?";
}

std::optional<BaseType> ParseBaseTypeName(std::string_view name) {
  for (BaseType t : kAllBaseTypes) {
    if (BaseTypeName(t) == name) return t;
  }
  return std::nullopt;
}

std::string_view StatusName(Status s) {
  switch (s) {
    case Status::kSatisfied:
      return "Satisfied";
    case Status::kFalsified:
      return "Falsified";
    case Status::kDropped:
      return "Dropped";
    case Status::kInconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string_view KindName(const TestKind& kind) {
  struct {
    std::string_view operator()(const UnitTest&) const { return "unit"; }
    std::string_view operator()(const ParamTest&) const { return "param"; }
    std::string_view operator()(const PolyTest&) const { return "poly"; }
    std::string_view operator()(const IoTest&) const { return "io"; }
  } visitor;
  return std::visit(visitor, kind);
}

std::string_view OriginName(Origin origin) {
  return origin == Origin::kUserDefined ? "UserDefined" : "ContractSynthesized";
}

std::string_view VerdictName(const Verdict& v) {
  struct {
    std::string_view operator()(const verdict::Passed&) const { return "Passed"; }
    std::string_view operator()(const verdict::PassedExhaustive&) const {
      return "PassedExhaustive";
    }
    std::string_view operator()(const verdict::Falsified&) const {
      return "Falsified";
    }
    std::string_view operator()(const verdict::Exhausted&) const {
      return "Exhausted";
    }
    std::string_view operator()(const verdict::SkippedProved&) const {
      return "SkippedProved";
    }
    std::string_view operator()(const verdict::Error&) const { return "Error"; }
  } visitor;
  return std::visit(visitor, v);
}

}  // namespace ndcheck
