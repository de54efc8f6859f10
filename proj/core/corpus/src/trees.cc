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

#include <vector>

#include "ndcheck/corpus/corpus.h"
#include "ndcheck/prop.h"

namespace ndcheck::corpus {

std::vector<TestSpec> TreesSuite() {
  const std::string m = "Trees";
  std::vector<TestSpec> s;
  s.push_back(Property("doubleMirrorIsId", m, 11, MakePoly([](auto tag) {
    using T = typename decltype(tag)::type;
    return MakeParam(ArbitraryOf<Tree<T>>(), [](const Tree<T>& t) {
      return IsEqual(Mirror(Mirror(t)), t);
    });
  })));
  s.push_back(Property("leavesOfMirrorAreReversed", m, 13, MakePoly([](auto tag) {
    using T = typename decltype(tag)::type;
    return MakeParam(ArbitraryOf<Tree<T>>(), [](const Tree<T>& t) {
      return IsEqual(Leaves(t), Rev(Leaves(Mirror(t))));
    });
  })));
  return s;
}

}  // namespace ndcheck::corpus
