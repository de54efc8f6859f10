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

#include "ndcheck/show.h"

#include <cstdio>
#include <string>

namespace ndcheck {
namespace {

std::string Escape(char c, char quote) {
  switch (c) {
    case '\n':
      return "\\n";
    case '\t':
      return "\\t";
    case '\\':
      return "\\\\";
    default:
      break;
  }
  if (c == quote) return std::string("\\") + c;
  auto u = static_cast<unsigned char>(c);
  if (u < 0x20 || u > 0x7E) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\%u", static_cast<unsigned>(u));
    return buf;
  }
  return std::string(1, c);
}

}  // namespace

std::string Show<char>::Render(char c) { return "'" + Escape(c, '\'') + "'"; }

std::string Show<std::string>::Render(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += Escape(c, '"');
  return out + "\"";
}

std::string Show<Ordering>::Render(Ordering o) {
  switch (o) {
    case Ordering::LT:
      return "LT";
    case Ordering::EQ:
      return "EQ";
    case Ordering::GT:
      return "GT";
  }
  return "?";
}

}  // namespace ndcheck
