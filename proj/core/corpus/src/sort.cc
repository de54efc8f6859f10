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

ContractEntry<std::vector<Int>, std::vector<Int>> SortContract() {
  ContractEntry<std::vector<Int>, std::vector<Int>> e;
  e.name = "sort";
  e.impl = [](const std::vector<Int>& xs) { return Value(QuickSort(xs)); };
  e.spec = SortSpec;
  e.post = [](const std::vector<Int>& xs, const std::vector<Int>& ys) {
    return xs.size() == ys.size();
  };
  e.input_gen = ListOf(GenInt());
  e.module = "Sort";
  e.line = 14;
  return e;
}

std::vector<TestSpec> SortSuite() {
  std::vector<TestSpec> s = Synthesize(SortContract());
  s.push_back(Property("sortlength", "Sort", 18,
                       MakeParam(ListOf(GenInt()), [](const std::vector<Int>& xs) {
                         return SameSet(QuickSort(xs).size(), xs.size());
                       })));
  return s;
}

}  // namespace ndcheck::corpus
