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

#include <string>
#include <vector>

#include "ndcheck/corpus/corpus.h"
#include "ndcheck/prop.h"

namespace ndcheck::corpus {

std::vector<TestSpec> ConcDupSuite() {
  const std::string m = "ConcDup";
  std::vector<TestSpec> s;
  s.push_back(UnitProperty("concNull12", m, 14,
                           IsEqual(Concat<Int>({}, {1, 2}), std::vector<Int>{1, 2})));
  s.push_back(UnitProperty(
      "concCurry", m, 15,
      IsEqual(std::string("Cu") + std::string("rry"), std::string("Curry"))));
  s.push_back(Property("concIsAssociative", m, 18, MakePoly([](auto tag) {
    using T = typename decltype(tag)::type;
    auto g = ListOf(ArbitraryOf<T>());
    return MakeParam(g, g, g, [](const std::vector<T>& xs, const std::vector<T>& ys,
                                 const std::vector<T>& zs) {
      return IsEqual(Concat(Concat(xs, ys), zs), Concat(xs, Concat(ys, zs)));
    });
  })));
  auto ints = ListOf(GenInt());
  s.push_back(Property(
      "concIsCommutative", m, 20,
      MakeParam(ints, ints, [](const std::vector<Int>& xs, const std::vector<Int>& ys) {
        return IsEqual(Concat(xs, ys), Concat(ys, xs));
      })));
  s.push_back(Property("concAddLengths", m, 22, MakePoly([](auto tag) {
    using T = typename decltype(tag)::type;
    auto g = ListOf(ArbitraryOf<T>());
    return MakeParam(g, g, [](const std::vector<T>& xs, const std::vector<T>& ys) {
      return IsEqual(xs.size() + ys.size(), Concat(xs, ys).size());
    });
  })));
  s.push_back(Property("concLength", m, 24, MakePoly([](auto tag) {
    using T = typename decltype(tag)::type;
    auto g = ListOf(ArbitraryOf<T>());
    return MakeParam(g, g, [](const std::vector<T>& xs, const std::vector<T>& ys) {
      return IsEqual(Concat(xs, ys).size(), xs.size() + ys.size());
    });
  })));
  s.push_back(UnitProperty("someDup1", m, 26,
                           ReducesTo(SomeDup<Int>({1, 2, 1, 2}), Int{1})));
  s.push_back(UnitProperty(
      "someDup12", m, 27,
      SameSet(SomeDup<Int>({1, 2, 1, 2, 1}), Or(Value<Int>(1), Value<Int>(2)))));
  return s;
}

}  // namespace ndcheck::corpus
