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

#include "ndcheck/corpus/corpus.h"

#include <algorithm>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gtest/gtest.h"
#include "ndcheck/enumerate.h"
#include "ndcheck/registry.h"

namespace ndcheck::corpus {
namespace {

using IntList = std::vector<Int>;

template <typename A>
std::vector<A> All(SearchTree<A> t) {
  auto out = Enumerate(std::move(t), Strategy::BreadthFirst(10'000'000));
  EXPECT_TRUE(out.exhausted);
  return out.values;
}

// Every permutation, with multiplicity, from std::next_permutation over the
// index order.
std::multiset<IntList> PermOracle(const IntList& xs) {
  std::vector<std::size_t> idx(xs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::multiset<IntList> out;
  do {
    IntList p;
    for (auto i : idx) p.push_back(xs[i]);
    out.insert(p);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

TEST(PermTest, MatchesNextPermutation) {
  const std::vector<IntList> inputs = {
      {}, {1}, {1, 2}, {2, 1, 3}, {1, 1, 2}, {4, 3, 2, 1}, {5, 1, 5, 2, 0}, {7, 7, 7, 7}};
  for (const auto& xs : inputs) {
    auto values = All(Perm(xs));
    std::multiset<IntList> got(values.begin(), values.end());
    EXPECT_EQ(got, PermOracle(xs)) << ShowValue(xs);
  }
}

TEST(SomeDupTest, MatchesPairScan) {
  // All lists over {0,1,2} up to length 5.
  std::vector<IntList> inputs = {{}};
  for (std::size_t start = 0; start < inputs.size(); ++start) {
    if (inputs[start].size() == 5) continue;
    for (Int x = 0; x < 3; ++x) {
      IntList ys = inputs[start];
      ys.push_back(x);
      inputs.push_back(ys);
    }
  }
  for (const auto& xs : inputs) {
    std::set<Int> expected;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (i != j && xs[i] == xs[j]) expected.insert(xs[i]);
      }
    }
    auto values = All(SomeDup(xs));
    EXPECT_EQ(std::set<Int>(values.begin(), values.end()), expected) << ShowValue(xs);
    auto set_values = All(IsSet(xs));
    std::set<bool> is_set(set_values.begin(), set_values.end());
    EXPECT_EQ(is_set, std::set<bool>{expected.empty()}) << ShowValue(xs);
  }
}

TEST(IsSetTest, NondeterministicFalse) {
  auto values = All(IsSet(IntList{1, 3, 1, 3, 1}));
  EXPECT_EQ(std::set<bool>(values.begin(), values.end()), std::set<bool>{false});
  EXPECT_GT(values.size(), 1u);  // one per duplicate pair
  EXPECT_EQ(All(IsSet(IntList{1, 2, 3})), std::vector<bool>{true});
}

TEST(QuickSortTest, DropsDuplicates) {
  EXPECT_EQ(QuickSort({3, 1, 2}), (IntList{1, 2, 3}));
  EXPECT_EQ(QuickSort({1, 1}), (IntList{1}));
  EXPECT_EQ(QuickSort({}), IntList{});
  EXPECT_EQ(QuickSort({0, 0, 0}), (IntList{0}));
  EXPECT_EQ(QuickSort({2, -1, 2, 5}), (IntList{-1, 2, 5}));
}

TEST(SortSpecTest, SortedPermutations) {
  EXPECT_EQ(All(SortSpec({3, 1, 2})), (std::vector<IntList>{{1, 2, 3}}));
  auto dup = All(SortSpec({1, 1}));
  EXPECT_EQ(std::set<IntList>(dup.begin(), dup.end()), (std::set<IntList>{{1, 1}}));
  EXPECT_TRUE(Sorted({}));
  EXPECT_TRUE(Sorted({1, 1, 2}));
  EXPECT_FALSE(Sorted({2, 1}));
}

TEST(ArithmeticTest, FactorialAndSum) {
  EXPECT_EQ(Fac(0), 1u);
  EXPECT_EQ(Fac(5), 120u);
  for (Int n = 1; n < 50; ++n) EXPECT_EQ(SumUp(n), n * (n + 1) / 2);
}

TEST(TreeTest, MirrorAndLeaves) {
  using T = Tree<Int>;
  T t = T::Node({T::Leaf(1), T::Node({T::Leaf(2), T::Leaf(3)}), T::Node({})});
  EXPECT_EQ(Leaves(t), (IntList{1, 2, 3}));
  EXPECT_EQ(Leaves(Mirror(t)), (IntList{3, 2, 1}));
  EXPECT_EQ(Mirror(Mirror(t)), t);
  EXPECT_EQ(ShowValue(T::Node({T::Leaf(1)})), "(Node [(Leaf 1)])");
}

TEST(TreeTest, GeneratorYieldsDistinctTrees) {
  auto trees = TakeValues(GenTree(GenBool()).tree, Strategy::BreadthFirst(), 200);
  EXPECT_EQ(trees.size(), 200u);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      ASSERT_FALSE(trees[i] == trees[j]) << i << " " << j;
    }
  }
}

TEST(NatTest, Generator) {
  auto nats = TakeValues(GenNat().tree, Strategy::BreadthFirst(), 10);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(nats[i].n, i);
}

TEST(RegisterTest, AllSuitesHaveUniqueNames) {
  SuiteRegistry reg;
  RegisterCorpus(reg);
  EXPECT_EQ(reg.Names(), (std::vector<std::string>{"BoolTest", "ConcDup", "IOTests", "IsSet",
                                                    "Perm", "Rev", "RevLong", "Sort",
                                                    "SumUp", "Trees"}));
  for (const auto& name : reg.Names()) EXPECT_NO_THROW(reg.Specs(name)) << name;
}

TEST(RegisterTest, SortSuiteHasSynthesizedProperties) {
  auto specs = SortSuite();
  std::vector<std::string> names;
  for (const auto& s : specs) names.push_back(s.name);
  EXPECT_EQ(names, (std::vector<std::string>{"sortSatisfiesSpecification",
                                              "sortSatisfiesPostCondition", "sortlength"}));
  EXPECT_EQ(specs[0].origin, Origin::kContractSynthesized);
  EXPECT_EQ(specs[2].origin, Origin::kUserDefined);
}

}  // namespace
}  // namespace ndcheck::corpus
