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

std::vector<TestSpec> BoolTestSuite() {
  std::vector<TestSpec> s;
  s.push_back(Property("negOr", "BoolTest", 4,
                       MakeParam(GenBool(), GenBool(), [](bool b1, bool b2) {
                         return IsEqual(!(b1 || b2), !b1 && !b2);
                       })));
  return s;
}

}  // namespace ndcheck::corpus
