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

// Example operations and the test suites written against them. The suites
// double as fixtures for the acceptance tests and as usage documentation.

#ifndef NDCHECK_CORPUS_CORPUS_H_
#define NDCHECK_CORPUS_CORPUS_H_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ndcheck/contracts.h"
#include "ndcheck/gen.h"
#include "ndcheck/registry.h"
#include "ndcheck/runner.h"
#include "ndcheck/search_tree.h"
#include "ndcheck/show.h"

namespace ndcheck::corpus {

template <typename A>
std::vector<A> Concat(std::vector<A> xs, const std::vector<A>& ys) {
  xs.insert(xs.end(), ys.begin(), ys.end());
  return xs;
}

template <typename A>
std::vector<A> Rev(const std::vector<A>& xs) {
  return {xs.rbegin(), xs.rend()};
}

namespace internal {

template <typename A>
SearchTree<std::vector<A>> PermsExtending(std::vector<A> prefix,
                                          std::vector<A> rest) {
  if (rest.empty()) return Value(std::move(prefix));
  std::vector<SearchTree<std::vector<A>>> picks;
  picks.reserve(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    picks.push_back(Defer<std::vector<A>>([prefix, rest, i] {
      std::vector<A> p = prefix;
      p.push_back(rest[i]);
      std::vector<A> r = rest;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
      return PermsExtending(std::move(p), std::move(r));
    }));
  }
  return Choice<std::vector<A>>(picks.begin(), picks.end());
}

}  // namespace internal

// Every way to pick some element as the head and permute the rest after it.
// Lists with repeated elements yield repeated values.
template <typename A>
SearchTree<std::vector<A>> Perm(std::vector<A> xs) {
  return internal::PermsExtending(std::vector<A>{}, std::move(xs));
}

// Some element occurring at least twice: one choice per index pair i < j
// with equal elements. Fails when there is none.
template <typename A>
SearchTree<A> SomeDup(const std::vector<A>& xs) {
  std::vector<SearchTree<A>> hits;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) hits.push_back(Value(xs[i]));
    }
  }
  return Choice<A>(hits.begin(), hits.end());
}

// False once per duplicated pair, True if there is none. Semantically
// deterministic, though it may yield False several times.
template <typename A>
SearchTree<bool> IsSet(const std::vector<A>& xs) {
  std::vector<SearchTree<bool>> hits;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) hits.push_back(Value(false));
    }
  }
  if (hits.empty()) return Value(true);
  return Choice<bool>(hits.begin(), hits.end());
}

bool Sorted(const std::vector<Int>& xs);

template <typename A>
bool AllDifferent(const std::vector<A>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) return false;
    }
  }
  return true;
}

std::size_t Fac(std::size_t n);

// 1 + 2 + ... + n. Does not terminate for n < 1.
Int SumUp(Int n);

// Quicksort with strict filters on both sides, so duplicates of the pivot
// are lost: [1,1] sorts to [1].
std::vector<Int> QuickSort(const std::vector<Int>& xs);

// The sorted permutations of xs.
SearchTree<std::vector<Int>> SortSpec(const std::vector<Int>& xs);

// Rose trees: a leaf with a value, or a node with any number of children.
template <typename A>
struct Tree {
  bool is_leaf = true;
  A value{};
  std::vector<Tree> children;

  static Tree Leaf(A a) { return {true, std::move(a), {}}; }
  static Tree Node(std::vector<Tree> ts) { return {false, A{}, std::move(ts)}; }

  friend bool operator==(const Tree&, const Tree&) = default;
};

template <typename A>
std::vector<A> Leaves(const Tree<A>& t) {
  if (t.is_leaf) return {t.value};
  std::vector<A> out;
  for (const auto& c : t.children) out = Concat(std::move(out), Leaves(c));
  return out;
}

template <typename A>
Tree<A> Mirror(const Tree<A>& t) {
  if (t.is_leaf) return t;
  std::vector<Tree<A>> cs;
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) {
    cs.push_back(Mirror(*it));
  }
  return Tree<A>::Node(std::move(cs));
}

// Leaf values from `ta` ||| nodes over lists of such trees.
template <typename A>
Generator<Tree<A>> GenTree(const Generator<A>& ta) {
  auto leaf = GenCons1([](const A& a) { return Tree<A>::Leaf(a); }, ta);
  auto subtrees = ListOf(Lazy([ta] { return GenTree(ta); }, "Tree"));
  auto node = GenCons1(
      [](const std::vector<Tree<A>>& ts) { return Tree<A>::Node(ts); }, subtrees);
  Generator<Tree<A>> g = Alt(std::move(leaf), std::move(node));
  g.name = "Tree " + ta.name;
  return g;
}

// Peano numbers.
struct Nat {
  std::size_t n = 0;

  static Nat Z() { return {0}; }
  static Nat S(Nat m) { return {m.n + 1}; }

  friend auto operator<=>(const Nat&, const Nat&) = default;
};

// Z ||| S(GenNat()).
Generator<Nat> GenNat();

// Suite builders. Suite keys equal module names, except RevLong: its single
// property belongs to module Rev but is kept out of the Rev suite because it
// is expected to exhaust its inputs.
std::vector<TestSpec> ConcDupSuite();
std::vector<TestSpec> PermSuite();
std::vector<TestSpec> RevSuite();
std::vector<TestSpec> RevLongSuite();
std::vector<TestSpec> BoolTestSuite();
std::vector<TestSpec> SumUpSuite();
std::vector<TestSpec> TreesSuite();
std::vector<TestSpec> SortSuite();
std::vector<TestSpec> IsSetSuite();
std::vector<TestSpec> IoTestsSuite();

// The Sort and IsSet contracts, for callers that want to inspect them.
ContractEntry<std::vector<Int>, std::vector<Int>> SortContract();
ContractEntry<std::vector<Int>, bool> IsSetContract();

// Registers every suite above under its key.
void RegisterCorpus(SuiteRegistry& registry);

}  // namespace ndcheck::corpus

namespace ndcheck {

template <typename A>
struct Show<corpus::Tree<A>> {
  static std::string Render(const corpus::Tree<A>& t) {
    if (t.is_leaf) return "(Leaf " + ShowValue(t.value) + ")";
    return "(Node " + ShowValue(t.children) + ")";
  }
};

template <>
struct Show<corpus::Nat> {
  static std::string Render(const corpus::Nat& m) {
    std::string out = "Z";
    for (std::size_t i = 0; i < m.n; ++i) out = "(S " + out + ")";
    return out;
  }
};

template <typename A>
struct Arbitrary<corpus::Tree<A>> {
  static Generator<corpus::Tree<A>> Get() { return corpus::GenTree(ArbitraryOf<A>()); }
};

}  // namespace ndcheck

#endif  // NDCHECK_CORPUS_CORPUS_H_
