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

std::vector<TestSpec> SumUpSuite() {
  const std::string m = "SumUp";
  std::vector<TestSpec> s;
  // Drops non-positive inputs, on which SumUp would not terminate.
  s.push_back(Property("sumUpIsCorrect", m, 5,
                       MakeParam(GenInt(), [](Int n) {
                         return Implies(n > 0, [n] {
                           return IsEqual(SumUp(n), n * (n + 1) / 2);
                         });
                       })));
  // The same law checked only on generated positive numbers.
  s.push_back(UnitProperty("sumUpIsCorrectForAll", m, 12,
                           ForAll(GenPositive(), [](Int n) {
                             return IsEqual(SumUp(n), n * (n + 1) / 2);
                           })));
  return s;
}

}  // namespace ndcheck::corpus
