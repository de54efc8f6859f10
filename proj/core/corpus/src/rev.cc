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

std::vector<TestSpec> RevSuite() {
  const std::string m = "Rev";
  std::vector<TestSpec> s;
  s.push_back(Property("revLength", m, 9, MakePoly([](auto tag) {
    using T = typename decltype(tag)::type;
    return MakeParam(ListOf(ArbitraryOf<T>()), [](const std::vector<T>& xs) {
      return IsEqual(Rev(xs).size(), xs.size());
    });
  })));
  s.push_back(Property("revRevIsId", m, 10, MakePoly([](auto tag) {
    using T = typename decltype(tag)::type;
    return MakeParam(ListOf(ArbitraryOf<T>()), [](const std::vector<T>& xs) {
      return IsEqual(Rev(Rev(xs)), xs);
    });
  })));
  return s;
}

std::vector<TestSpec> RevLongSuite() {
  std::vector<TestSpec> s;
  s.push_back(Property("revRevIsIdLong", "Rev", 13,
                       MakeParam(ListOf(GenInt()), [](const std::vector<Int>& xs) {
                         return Implies(xs.size() > 100,
                                        [xs] { return IsEqual(Rev(Rev(xs)), xs); });
                       })));
  return s;
}

}  // namespace ndcheck::corpus
