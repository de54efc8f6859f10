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

#include "ndcheck/registry.h"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ndcheck {

SuiteRegistry& SuiteRegistry::Global() {
  static SuiteRegistry* registry = new SuiteRegistry();
  return *registry;
}

void SuiteRegistry::Register(std::string suite, Factory factory) {
  if (suite.empty()) throw RegistrationError("empty suite name");
  if (!suites_.emplace(suite, std::move(factory)).second) {
    throw RegistrationError("suite " + suite + " registered twice");
  }
}

bool SuiteRegistry::Contains(std::string_view suite) const {
  return suites_.find(suite) != suites_.end();
}

std::vector<std::string> SuiteRegistry::Names() const {
  std::vector<std::string> names;
  for (const auto& [name, factory] : suites_) names.push_back(name);
  return names;
}

std::vector<TestSpec> SuiteRegistry::Specs(std::string_view suite) const {
  auto it = suites_.find(suite);
  if (it == suites_.end()) {
    throw RegistrationError("unknown suite " + std::string(suite));
  }
  std::vector<TestSpec> specs = it->second();
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& s : specs) {
    if (!seen.emplace(s.module, s.name).second) {
      throw RegistrationError("duplicate test " + s.name + " in module " +
                              s.module);
    }
  }
  return specs;
}

}  // namespace ndcheck
