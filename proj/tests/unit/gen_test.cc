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

#include "ndcheck/gen.h"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "ndcheck/enumerate.h"

namespace ndcheck {
namespace {

template <typename A>
std::vector<A> Take(const Generator<A>& g, std::size_t n,
                    Strategy s = Strategy::RandomLevelDiagonal(0, 10'000'000)) {
  return TakeValues(g.tree, s, n);
}

template <typename A>
bool NoDuplicates(const std::vector<A>& v) {
  std::set<A> s(v.begin(), v.end());
  return s.size() == v.size();
}

TEST(GenTest, FiniteBaseTypesAreExhausted) {
  auto b = Enumerate(GenBool().tree, Strategy{});
  EXPECT_TRUE(b.exhausted);
  EXPECT_EQ(b.values.size(), 2u);
  EXPECT_TRUE(NoDuplicates(b.values));
  auto o = Enumerate(GenOrdering().tree, Strategy{});
  EXPECT_TRUE(o.exhausted);
  EXPECT_EQ(std::set<Ordering>(o.values.begin(), o.values.end()),
            (std::set<Ordering>{Ordering::LT, Ordering::EQ, Ordering::GT}));
  auto c = Enumerate(GenChar().tree, Strategy{});
  EXPECT_TRUE(c.exhausted);
  EXPECT_EQ(c.values.size(), 95u);
  EXPECT_TRUE(NoDuplicates(c.values));
}

// Brute force: the first 2^k - 1 values in breadth-first order are exactly
// the numbers below 2^k, because k-bit numbers fill level 2k-1.
TEST(GenTest, PositiveNumbersAppearOnceEach) {
  auto v = Take(GenPositive(), (1 << 12) - 1, Strategy::BreadthFirst(10'000'000));
  std::vector<Int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (Int i = 1; i < (1 << 12); ++i) ASSERT_EQ(sorted[i - 1], i);
  // The diagonal walk reaches depth 126 and beyond; nothing may wrap around.
  auto d = Take(GenPositive(), 5000, Strategy::LevelDiagonal(10'000'000));
  EXPECT_TRUE(NoDuplicates(d));
  EXPECT_TRUE(std::all_of(d.begin(), d.end(), [](Int x) { return x >= 1; }));
  auto r = Take(GenPositive(), 5000);
  EXPECT_TRUE(NoDuplicates(r));
  EXPECT_TRUE(std::all_of(r.begin(), r.end(), [](Int x) { return x >= 1; }));
}

// The balanced variant 1 ||| 2(n+1) ||| 2n+1 is duplicate free but misses
// numbers such as 2, 5, and 6, which is why GenPositive uses 2n and 2n+1.
TEST(GenTest, BalancedVariantWithOffsetMissesNumbers) {
  std::function<Generator<Int>()> variant = [&variant] {
    auto rest = Lazy(variant, "pos");
    return Alt(Alt(GenCons0<Int>(1), GenCons1([](Int n) { return 2 * (n + 1); }, rest)),
               GenCons1([](Int n) { return 2 * n + 1; }, rest));
  };
  auto v = Take(variant(), 2000, Strategy::BreadthFirst(10'000'000));
  EXPECT_TRUE(NoDuplicates(v));
  std::set<Int> seen(v.begin(), v.end());
  // Any n >= 1 is 1, 2(m+1) >= 4, or 2m+1 >= 3 for some generated m >= 1.
  EXPECT_FALSE(seen.count(2));
  EXPECT_FALSE(seen.count(5));
  EXPECT_FALSE(seen.count(6));
  EXPECT_TRUE(seen.count(3) && seen.count(4) && seen.count(7));
}

TEST(GenTest, IntegersCoverSymmetricRange) {
  for (auto s : {Strategy::BreadthFirst(10'000'000), Strategy::LevelDiagonal(10'000'000),
                 Strategy::RandomLevelDiagonal(3, 10'000'000)}) {
    auto v = Take(GenInt(), 3000, s);
    EXPECT_TRUE(NoDuplicates(v));
    std::set<Int> seen(v.begin(), v.end());
    for (Int i = -20; i <= 20; ++i) EXPECT_TRUE(seen.count(i)) << i;
  }
}

// All 15 Boolean lists of length at most 3, by direct construction.
std::set<std::vector<bool>> ShortBoolLists() {
  std::set<std::vector<bool>> out;
  for (int len = 0; len <= 3; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::vector<bool> xs;
      for (int i = 0; i < len; ++i) xs.push_back((bits >> i) & 1);
      out.insert(xs);
    }
  }
  return out;
}

TEST(GenTest, BoolListsAreCompleteAndDuplicateFree) {
  const auto expected = ShortBoolLists();
  ASSERT_EQ(expected.size(), 15u);
  for (auto s : {Strategy::BreadthFirst(), Strategy::LevelDiagonal(),
                 Strategy::RandomLevelDiagonal(0), Strategy::RandomLevelDiagonal(77)}) {
    auto v = Take(ListOf(GenBool()), 1000, s);
    EXPECT_TRUE(NoDuplicates(v)) << StrategyName(s.kind);
    std::set<std::vector<bool>> seen(v.begin(), v.end());
    for (const auto& xs : expected) EXPECT_TRUE(seen.count(xs)) << StrategyName(s.kind);
  }
}

TEST(GenTest, ListOfFiniteTypeHasExpectedShape) {
  // [] first, then singletons at the next levels.
  auto v = Take(ListOf(GenBool()), 3, Strategy::BreadthFirst());
  EXPECT_EQ(v[0], std::vector<bool>{});
  EXPECT_EQ(ListOf(GenBool()).name, "[Bool]");
}

TEST(GenTest, GenConsCombinesAllArguments) {
  auto g = GenCons3([](bool a, Ordering o, bool b) { return std::make_tuple(a, o, b); },
                    GenBool(), GenOrdering(), GenBool());
  auto out = Enumerate(g.tree, Strategy{});
  EXPECT_TRUE(out.exhausted);
  EXPECT_EQ(out.values.size(), 12u);
  EXPECT_TRUE(NoDuplicates(out.values));

  auto five = GenCons5([](bool a, bool b, bool c, bool d, bool e) {
    return a + 2 * b + 4 * c + 8 * d + 16 * e;
  }, GenBool(), GenBool(), GenBool(), GenBool(), GenBool());
  auto all = Enumerate(five.tree, Strategy{});
  std::set<int> seen(all.values.begin(), all.values.end());
  EXPECT_EQ(seen.size(), 32u);
  EXPECT_EQ(all.values.size(), 32u);
}

TEST(GenTest, AltAndFail) {
  auto g = GenCons0(1) || GenCons0(2) || FailGen<int>();
  auto out = Enumerate(g.tree, Strategy{});
  EXPECT_EQ(std::set<int>(out.values.begin(), out.values.end()), (std::set<int>{1, 2}));
  EXPECT_TRUE(out.exhausted);
}

// Peano numbers through a recursive generator: Z ||| S nat.
struct Peano {
  int n;
  friend auto operator<=>(const Peano&, const Peano&) = default;
};
}  // namespace

template <>
struct Show<Peano> {
  static std::string Render(const Peano& p) { return std::to_string(p.n); }
};

namespace {
Generator<Peano> GenPeano() {
  return GenCons0(Peano{0}, "Z") ||
         GenCons1([](Peano p) { return Peano{p.n + 1}; }, Lazy(GenPeano, "nat"));
}

TEST(GenTest, RecursiveGeneratorThroughLazy) {
  auto v = Take(GenPeano(), 30, Strategy::BreadthFirst());
  for (int i = 0; i < 30; ++i) EXPECT_EQ(v[i].n, i);
}

TEST(GenTest, TuplesCoverProductOfFiniteDomains) {
  auto g = TupleOf(GenBool(), GenOrdering());
  auto out = Enumerate(g.tree, Strategy{});
  EXPECT_TRUE(out.exhausted);
  EXPECT_EQ(out.values.size(), 6u);
  EXPECT_TRUE(NoDuplicates(out.values));
  EXPECT_EQ(g.name, "(Bool,Ordering)");
  auto p = PairOf(GenBool(), GenBool());
  EXPECT_EQ(Enumerate(p.tree, Strategy{}).values.size(), 4u);
}

TEST(GenTest, ArbitraryMatchesBuiltins) {
  EXPECT_EQ(Enumerate(ArbitraryOf<bool>().tree, Strategy{}).values.size(), 2u);
  auto nested = Take(ArbitraryOf<std::vector<std::tuple<bool, Int>>>(), 200);
  EXPECT_TRUE(NoDuplicates(nested));
}

TEST(GenTest, BaseTypeNames) {
  for (BaseType t : kAllBaseTypes) EXPECT_EQ(ParseBaseTypeName(BaseTypeName(t)), t);
  EXPECT_EQ(BaseTypeName(BaseType::kOrdering), "ordering");
  EXPECT_FALSE(ParseBaseTypeName("float"));
}

}  // namespace
}  // namespace ndcheck
