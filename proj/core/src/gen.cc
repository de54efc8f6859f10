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

#include <limits>
#include <vector>

#include "ndcheck/search_tree.h"
#include "ndcheck/show.h"

namespace ndcheck {

namespace {

// An infinite spine without values.
SearchTree<Int> Endless() {
  return Defer<Int>([] { return Or(Fail<Int>(), Endless()); });
}

// Past 63 bits the children of n would overflow Int. They are replaced by an
// endless empty spine rather than cut off: a finite tree this wide would make
// a diagonal walk scan a whole level before it could tell it was the last.
SearchTree<Int> PositivesFrom(Int n) {
  if (n > std::numeric_limits<Int>::max() / 2) return Or(Value(n), Endless());
  auto below = [](Int m) {
    return Defer<Int>([m] { return PositivesFrom(m); });
  };
  return Or(Value(n), Or(below(2 * n), below(2 * n + 1)));
}

}  // namespace

Generator<Int> GenPositive() { return {PositivesFrom(1), "pos"}; }

Generator<Int> GenInt() {
  Generator<Int> pos = GenPositive();
  Generator<Int> neg = GenCons1([](Int n) { return -n; }, pos);
  return {Or(Value<Int>(0), Or(neg.tree, pos.tree)), "Int"};
}

Generator<bool> GenBool() {
  return {Or(Value(false), Value(true)), "Bool"};
}

Generator<Ordering> GenOrdering() {
  return {Or(Value(Ordering::LT), Or(Value(Ordering::EQ), Value(Ordering::GT))),
          "Ordering"};
}

Generator<char> GenChar() {
  std::vector<SearchTree<char>> leaves;
  for (char c = 0x20; c <= 0x7E; ++c) leaves.push_back(Value(c));
  return {Choice<char>(leaves.begin(), leaves.end()), "Char"};
}

}  // namespace ndcheck
