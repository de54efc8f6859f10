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

#include "ndcheck/corpus/corpus.h"

namespace ndcheck::corpus {

void RegisterCorpus(SuiteRegistry& registry) {
  registry.Register("BoolTest", BoolTestSuite);
  registry.Register("ConcDup", ConcDupSuite);
  registry.Register("IOTests", IoTestsSuite);
  registry.Register("IsSet", IsSetSuite);
  registry.Register("Perm", PermSuite);
  registry.Register("Rev", RevSuite);
  registry.Register("RevLong", RevLongSuite);
  registry.Register("Sort", SortSuite);
  registry.Register("SumUp", SumUpSuite);
  registry.Register("Trees", TreesSuite);
}

}  // namespace ndcheck::corpus
