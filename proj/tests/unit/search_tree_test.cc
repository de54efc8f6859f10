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

#include "ndcheck/search_tree.h"

#include <algorithm>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "ndcheck/enumerate.h"
#include "test_trees.h"

namespace ndcheck {
namespace {

std::vector<int> AllValues(SearchTree<int> t) {
  auto out = Enumerate(std::move(t), Strategy::BreadthFirst(1'000'000));
  EXPECT_TRUE(out.exhausted);
  std::sort(out.values.begin(), out.values.end());
  return out.values;
}

TEST(SearchTreeTest, ConstructorsAndQueries) {
  auto v = Value(3);
  EXPECT_TRUE(v.IsValue());
  EXPECT_EQ(v.value(), 3);
  EXPECT_TRUE(Fail<int>().IsFail());
  EXPECT_TRUE(SearchTree<int>().IsFail());
  auto o = Or(Value(1), Value(2));
  ASSERT_TRUE(o.IsOr());
  EXPECT_EQ(o.left().value(), 1);
  EXPECT_EQ(o.right().value(), 2);
  auto d = Defer<int>([] { return Value(9); });
  ASSERT_TRUE(d.IsLazy());
  EXPECT_EQ(d.Step().value(), 9);
}

TEST(SearchTreeTest, DeferIsNotEvaluatedUntilForced) {
  int calls = 0;
  auto d = Defer<int>([&calls] {
    ++calls;
    return Value(1);
  });
  auto t = Or(Value(0), d);
  EXPECT_EQ(calls, 0);
  EXPECT_EQ(AllValues(t), (std::vector<int>{0, 1}));
  EXPECT_EQ(calls, 1);
}

TEST(SearchTreeTest, ChoiceIsBalanced) {
  std::vector<SearchTree<int>> leaves;
  for (int i = 0; i < 8; ++i) leaves.push_back(Value(i));
  auto t = Choice<int>(leaves.begin(), leaves.end());
  // Eight leaves in a balanced tree all sit at depth three.
  auto node = t;
  for (int depth = 0; depth < 3; ++depth) {
    ASSERT_TRUE(node.IsOr());
    node = node.left();
  }
  EXPECT_TRUE(node.IsValue());
  EXPECT_EQ(AllValues(t), (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
  std::vector<SearchTree<int>> none;
  EXPECT_TRUE((Choice<int>(none.begin(), none.end()).IsFail()));
}

TEST(SearchTreeTest, BindReplacesValuesAndKeepsFailures) {
  auto t = Or(Value(1), Or(Fail<int>(), Value(2)));
  auto b = Bind(t, [](int x) { return Or(Value(10 * x), Value(10 * x + 1)); });
  EXPECT_EQ(AllValues(b), (std::vector<int>{10, 11, 20, 21}));
  auto none = Bind(t, [](int) { return Fail<int>(); });
  EXPECT_TRUE(AllValues(none).empty());
}

TEST(SearchTreeTest, MapChangesValueType) {
  auto t = Map(Or(Value(1), Value(2)), [](int x) { return x % 2 == 0; });
  auto out = Enumerate(t, Strategy::BreadthFirst());
  EXPECT_EQ(out.values, (std::vector<bool>{false, true}));
}

// Monad laws, compared on value multisets of random trees.
TEST(SearchTreeTest, BindLawsOnRandomTrees) {
  std::mt19937 rng(17);
  auto f = [](int x) { return Or(Value(x + 1), x % 2 ? Fail<int>() : Value(x * 2)); };
  auto g = [](int x) { return x > 3 ? Value(x - 3) : Or(Value(x), Value(-x)); };
  for (int i = 0; i < 200; ++i) {
    int next = 0;
    auto raw = testing::RandomRawTree(rng, 6, next);
    auto t = testing::ToSearchTree(raw, i);
    // Right identity.
    EXPECT_EQ(AllValues(Bind(t, [](int x) { return Value(x); })), testing::SortedLeaves(*raw));
    // Associativity.
    EXPECT_EQ(AllValues(Bind(Bind(t, f), g)),
              AllValues(Bind(t, [&](int x) { return Bind(f(x), g); })));
  }
  // Left identity.
  for (int x = -3; x < 6; ++x) EXPECT_EQ(AllValues(Bind(Value(x), f)), AllValues(f(x)));
}

TEST(SearchTreeTest, BindOnInfiniteTreeIsLazy) {
  auto evens = Map(testing::NatsFrom(0), [](int n) { return 2 * n; });
  auto first = TakeValues(evens, Strategy::BreadthFirst(), 4);
  EXPECT_EQ(first, (std::vector<int>{0, 2, 4, 6}));
}

}  // namespace
}  // namespace ndcheck
