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

#ifndef NDCHECK_REGISTRY_H_
#define NDCHECK_REGISTRY_H_

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ndcheck/runner.h"

namespace ndcheck {

// Thrown for malformed registrations: duplicate suites or test names, or
// contracts without any contract field.
class RegistrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Test suites keyed by name. A suite is built on demand by its factory, so
// registering is cheap and nothing is enumerated before a run.
class SuiteRegistry {
 public:
  using Factory = std::function<std::vector<TestSpec>()>;

  // The process-wide registry the command-line tool reads.
  static SuiteRegistry& Global();

  void Register(std::string suite, Factory factory);
  bool Contains(std::string_view suite) const;
  // Suite names in lexicographic order.
  std::vector<std::string> Names() const;
  // Specs of one suite, in registration order. Throws RegistrationError for
  // unknown suites and for duplicate test names.
  std::vector<TestSpec> Specs(std::string_view suite) const;

 private:
  std::map<std::string, Factory, std::less<>> suites_;
};

}  // namespace ndcheck

#endif  // NDCHECK_REGISTRY_H_
