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

std::vector<TestSpec> PermSuite() {
  const std::string m = "Perm";
  std::vector<TestSpec> s;
  s.push_back(Property("permLength", m, 12, MakePoly([](auto tag) {
    using T = typename decltype(tag)::type;
    return MakeParam(ListOf(ArbitraryOf<T>()), [](const std::vector<T>& xs) {
      auto lengths = Map(Perm(xs), [](const std::vector<T>& p) { return p.size(); });
      return SameSet(std::move(lengths), xs.size());
    });
  })));
  s.push_back(Property(
      "permCount", m, 15, MakeParam(ListOf(GenInt()), [](const std::vector<Int>& xs) {
        return Implies(AllDifferent(xs),
                       [xs] { return ValueCount(Perm(xs), Fac(xs.size())); });
      })));
  s.push_back(Property("permIsEventuallySorted", m, 23,
                       MakeParam(ListOf(GenInt()), [](const std::vector<Int>& xs) {
                         return Eventually(Map(Perm(xs), Sorted));
                       })));
  return s;
}

}  // namespace ndcheck::corpus
