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

#include "ndcheck/report.h"

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace ndcheck {
namespace {

std::string Header(const TestResult& r) {
  std::string h = r.name + " (module " + r.module;
  if (r.line) h += ", line " + std::to_string(*r.line);
  return h + ")";
}

std::string Tests(std::size_t n) {
  return std::to_string(n) + (n == 1 ? " test." : " tests.");
}

std::string LabelTable(const TestResult& r) {
  if (r.labels.empty() || r.executed == 0) return "";
  std::vector<std::pair<std::string, std::size_t>> rows(r.labels.begin(),
                                                        r.labels.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  std::string out;
  for (const auto& [label, count] : rows) {
    out += " " + std::to_string(count * 100 / r.executed) + "% " + label + "\n";
  }
  return out;
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "json") return ReportFormat::kJsonLines;
  return std::nullopt;
}

std::string Ordinal(std::size_t n) {
  const char* suffix = "th";
  if (n % 100 < 11 || n % 100 > 13) {
    switch (n % 10) {
      case 1:
        suffix = "st";
        break;
      case 2:
        suffix = "nd";
        break;
      case 3:
        suffix = "rd";
        break;
      default:
        break;
    }
  }
  return std::to_string(n) + suffix;
}

std::string RenderResult(const TestResult& r) {
  struct {
    const TestResult& r;
    std::string operator()(const verdict::Passed& v) const {
      return Header(r) + ":\n OK, passed " + Tests(v.tests) + "\n";
    }
    std::string operator()(const verdict::PassedExhaustive& v) const {
      return Header(r) + ":\n Passed all available tests: " + Tests(v.tests) + "\n";
    }
    std::string operator()(const verdict::Falsified& v) const {
      std::string out = Header(r) + " failed\nFalsified by " +
                        Ordinal(v.case_index) + " test.\n";
      if (!v.arguments.empty()) out += "Arguments: " + v.arguments + "\n";
      return out + "Results:   " + v.results + "\n";
    }
    std::string operator()(const verdict::Exhausted& v) const {
      return Header(r) + ":\n Arguments exhausted after " +
             std::to_string(v.executed) + " test.\n";
    }
    std::string operator()(const verdict::SkippedProved& v) const {
      return Header(r) + ":\n Not tested, proved in " + v.proof_file + ".\n";
    }
    std::string operator()(const verdict::Error& v) const {
      return Header(r) + " failed\nError: " + v.message + "\n";
    }
  } visitor{r};
  return std::visit(visitor, r.verdict) + LabelTable(r);
}

std::string RenderJsonLine(const TestResult& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["module"] = r.module;
  j["line"] = r.line ? nlohmann::ordered_json(*r.line) : nullptr;
  j["verdict"] = std::string(VerdictName(r.verdict));
  j["tests_executed"] = r.executed;
  j["tests_dropped"] = r.dropped;
  j["case_index"] = nullptr;
  j["arguments"] = nullptr;
  j["results"] = nullptr;
  j["labels"] = nlohmann::ordered_json::object();
  j["proof_file"] = nullptr;
  j["message"] = nullptr;
  if (const auto* f = std::get_if<verdict::Falsified>(&r.verdict)) {
    j["case_index"] = f->case_index;
    j["arguments"] = f->arguments;
    j["results"] = f->results;
  } else if (const auto* s = std::get_if<verdict::SkippedProved>(&r.verdict)) {
    j["proof_file"] = s->proof_file;
  } else if (const auto* e = std::get_if<verdict::Error>(&r.verdict)) {
    j["message"] = e->message;
  }
  for (const auto& [label, count] : r.labels) j["labels"][label] = count;
  return j.dump();
}

std::string RenderReport(const TestReport& report, ReportFormat format) {
  std::string out;
  for (const auto& r : report.results) {
    out += format == ReportFormat::kText ? RenderResult(r) : RenderJsonLine(r) + "\n";
  }
  return out;
}

}  // namespace ndcheck
