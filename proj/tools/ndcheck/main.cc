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

#include <iostream>

#include "ndcheck/cli.h"
#include "ndcheck/corpus/corpus.h"
#include "ndcheck/registry.h"

int main(int argc, char** argv) {
  ndcheck::SuiteRegistry& registry = ndcheck::SuiteRegistry::Global();
  ndcheck::corpus::RegisterCorpus(registry);
  return ndcheck::cli::Main(argc, argv, registry, std::cout, std::cerr);
}
