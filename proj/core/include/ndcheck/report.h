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

#ifndef NDCHECK_REPORT_H_
#define NDCHECK_REPORT_H_

#include <optional>
#include <string>
#include <string_view>

#include "ndcheck/runner.h"

namespace ndcheck {

enum class ReportFormat { kText, kJsonLines };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

// Text blocks look like
//
//   revRevIsId_ON_BASETYPE (module Rev, line 10):
//    OK, passed 100 tests.
//
// and failures like
//
//   concIsCommutative (module ConcDup, line 20) failed
//   Falsified by 8th test.
//   Arguments: [-1] [-3]
//   Results:   ([-1,-3],[-3,-1])
std::string RenderResult(const TestResult& r);

// One JSON object per line with the fields name, module, line, verdict,
// tests_executed, tests_dropped, case_index, arguments, results, labels,
// proof_file, and message. Absent values are null.
std::string RenderJsonLine(const TestResult& r);

std::string RenderReport(const TestReport& report, ReportFormat format);

// "1st", "2nd", "3rd", "4th", "11th", "21st", ...
std::string Ordinal(std::size_t n);

}  // namespace ndcheck

#endif  // NDCHECK_REPORT_H_
