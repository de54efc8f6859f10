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

#ifndef NDCHECK_SHOW_H_
#define NDCHECK_SHOW_H_

#include <concepts>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace ndcheck {

// The three-valued comparison type used as the default element type when a
// polymorphic property is instantiated.
enum class Ordering { LT, EQ, GT };

using Int = std::int64_t;
using Unit = std::monostate;

// Textual rendering of test values for reports, in the notation of a
// functional language: lists as [1,2], tuples as (a,b), booleans as
// True/False. Specialize Show<T> for user types, or give them operator<<.
template <typename T, typename = void>
struct Show;

template <typename T>
std::string ShowValue(const T& v) {
  return Show<T>::Render(v);
}

template <>
struct Show<bool> {
  static std::string Render(bool b) { return b ? "True" : "False"; }
};

template <>
struct Show<char> {
  static std::string Render(char c);
};

template <>
struct Show<std::string> {
  static std::string Render(const std::string& s);
};

template <>
struct Show<Ordering> {
  static std::string Render(Ordering o);
};

template <>
struct Show<Unit> {
  static std::string Render(const Unit&) { return "()"; }
};

template <typename T>
struct Show<T, std::enable_if_t<std::is_integral_v<T> &&
                                !std::is_same_v<T, bool> &&
                                !std::is_same_v<T, char>>> {
  static std::string Render(T v) { return std::to_string(v); }
};

template <typename T>
struct Show<std::vector<T>> {
  static std::string Render(const std::vector<T>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) out += ',';
      out += ShowValue(xs[i]);
    }
    return out + "]";
  }
};

template <typename... Ts>
struct Show<std::tuple<Ts...>> {
  static std::string Render(const std::tuple<Ts...>& t) {
    std::string out = "(";
    std::apply(
        [&out](const auto&... xs) {
          bool first = true;
          ((out += (first ? "" : ","), out += ShowValue(xs), first = false),
           ...);
        },
        t);
    return out + ")";
  }
};

template <typename A, typename B>
struct Show<std::pair<A, B>> {
  static std::string Render(const std::pair<A, B>& p) {
    return "(" + ShowValue(p.first) + "," + ShowValue(p.second) + ")";
  }
};

namespace internal {
template <typename T>
concept Streamable = requires(std::ostream& os, const T& v) { os << v; };
}  // namespace internal

template <typename T>
  requires(!std::is_arithmetic_v<T> && internal::Streamable<T>)
struct Show<T, void> {
  static std::string Render(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }
};

// Renders a parameter list the way a failure report prints arguments:
// space-separated, each argument in its own notation.
template <typename... Ts>
std::string ShowArguments(const std::tuple<Ts...>& args) {
  std::string out;
  std::apply(
      [&out](const auto&... xs) {
        ((out += (out.empty() ? "" : " "), out += ShowValue(xs)), ...);
      },
      args);
  return out;
}

}  // namespace ndcheck

#endif  // NDCHECK_SHOW_H_
