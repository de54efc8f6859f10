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

namespace ndcheck::corpus {

ContractEntry<std::vector<Int>, bool> IsSetContract() {
  ContractEntry<std::vector<Int>, bool> e;
  e.name = "isSet";
  e.impl = [](const std::vector<Int>& xs) { return IsSet(xs); };
  e.det = true;
  e.input_gen = ListOf(GenInt());
  e.module = "IsSet";
  e.line = 4;
  return e;
}

std::vector<TestSpec> IsSetSuite() { return Synthesize(IsSetContract()); }

}  // namespace ndcheck::corpus
