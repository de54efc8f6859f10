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

#ifndef NDCHECK_CONTRACTS_H_
#define NDCHECK_CONTRACTS_H_

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ndcheck/gen.h"
#include "ndcheck/prop.h"
#include "ndcheck/registry.h"
#include "ndcheck/runner.h"
#include "ndcheck/search_tree.h"

namespace ndcheck {

// An operation together with the contracts it is checked against.
template <typename A, typename B>
struct ContractEntry {
  std::string name;
  std::function<SearchTree<B>(const A&)> impl;
  // Same type as impl; the two must have equal value sets on every input.
  std::optional<std::function<SearchTree<B>(const A&)>> spec;
  // Restricts the inputs every synthesized property is checked on.
  std::optional<std::function<bool(const A&)>> pre;
  // Must hold for the input and each value of impl.
  std::optional<std::function<bool(const A&, const B&)>> post;
  // impl yields at most one value per input.
  bool det = false;
  Generator<A> input_gen;
  std::string module;
  std::optional<int> line;
};

// Properties implied by the contract fields that are present:
//
//   <f>SatisfiesSpecification  x: pre(x) ==> impl(x) <~> spec(x)
//   <f>SatisfiesPostCondition  x: pre(x) ==> always(post(x, impl(x)))
//   <f>IsDeterministic         x: impl(x) #< 2
//
// Throws RegistrationError when no contract field is present.
template <typename A, typename B>
std::vector<TestSpec> Synthesize(const ContractEntry<A, B>& e) {
  if (!e.spec && !e.pre && !e.post && !e.det) {
    throw RegistrationError("contract for " + e.name + " has no contract field");
  }
  if (!e.impl) throw RegistrationError("contract for " + e.name + " has no operation");
  auto impl = e.impl;
  std::function<bool(const A&)> pre = [](const A&) { return true; };
  if (e.pre) pre = *e.pre;

  auto make = [&](std::string suffix, ParamTest param) {
    TestSpec s = Property(e.name + std::move(suffix), e.module, e.line,
                          std::move(param));
    s.origin = Origin::kContractSynthesized;
    return s;
  };

  std::vector<TestSpec> out;
  if (e.spec) {
    auto spec = *e.spec;
    out.push_back(make("SatisfiesSpecification",
                       MakeParam(e.input_gen, [impl, spec, pre](const A& x) {
                         return Implies(pre(x), SameSet(impl(x), spec(x)));
                       })));
  }
  if (e.post) {
    auto post = *e.post;
    out.push_back(make("SatisfiesPostCondition",
                       MakeParam(e.input_gen, [impl, post, pre](const A& x) {
                         auto holds = Map(impl(x), [post, x](const B& y) {
                           return post(x, y);
                         });
                         return Implies(pre(x), Always(std::move(holds)));
                       })));
  }
  if (e.det) {
    out.push_back(make("IsDeterministic",
                       MakeParam(e.input_gen, [impl](const A& x) {
                         return ValueCountLess(impl(x), 2);
                       })));
  }
  return out;
}

// An unreadable proof directory.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lower-cased with '-' and '_' removed.
std::string NormalizeProofName(std::string_view name);

// Property names that have a proof file, normalized, mapped to the file name.
class ProofIndex {
 public:
  void Add(std::string_view property, std::string file);
  // The proof file for a property name, if any.
  std::optional<std::string> Find(std::string_view property) const;
  std::size_t size() const { return proofs_.size(); }
  bool empty() const { return proofs_.empty(); }

 private:
  std::map<std::string, std::string> proofs_;
};

// Collects files named proof-<t>.<ext> from a flat directory. Everything after
// the first dot is the extension. Throws ConfigError if `dir` cannot be read.
ProofIndex ScanProofs(const std::filesystem::path& dir);

// Marks every spec covered by a proof; the runner then skips it.
std::vector<TestSpec> ApplyProofs(std::vector<TestSpec> specs,
                                  const ProofIndex& index);

}  // namespace ndcheck

#endif  // NDCHECK_CONTRACTS_H_
