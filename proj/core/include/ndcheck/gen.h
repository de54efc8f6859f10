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

#ifndef NDCHECK_GEN_H_
#define NDCHECK_GEN_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "ndcheck/search_tree.h"
#include "ndcheck/show.h"

namespace ndcheck {

// A search tree of test data plus a name used in listings.
template <typename A>
struct Generator {
  using value_type = A;

  SearchTree<A> tree;
  std::string name;
};

// Base types a polymorphic property can be instantiated at.
enum class BaseType { kOrdering, kBool, kInt, kChar };

// "ordering", "bool", "int", "char".
std::string_view BaseTypeName(BaseType t);
std::optional<BaseType> ParseBaseTypeName(std::string_view name);

inline constexpr BaseType kAllBaseTypes[] = {
    BaseType::kOrdering, BaseType::kBool, BaseType::kInt, BaseType::kChar};

template <typename A>
Generator<A> GenCons0(A value, std::string name = "") {
  if (name.empty()) name = ShowValue(value);
  return {Value(std::move(value)), std::move(name)};
}

namespace internal {

template <typename C, typename Tuple>
auto GenConsImpl(std::shared_ptr<const C> c, Tuple partial) {
  using R = std::decay_t<decltype(std::apply(*c, partial))>;
  return Value<R>(std::apply(*c, std::move(partial)));
}

template <typename C, typename Tuple, typename G, typename... Rest>
auto GenConsImpl(std::shared_ptr<const C> c, Tuple partial, const G& g,
                 const Rest&... rest) {
  using A = typename G::value_type;
  return Bind(g.tree, [c, partial = std::move(partial), rest...](const A& a) {
    return GenConsImpl(c, std::tuple_cat(partial, std::tuple<A>(a)), rest...);
  });
}

}  // namespace internal

// Applies an n-ary constructor to every combination of generated arguments,
// by nested Bind over the argument trees (leftmost argument outermost).
template <typename C, typename... Gens>
auto GenCons(C c, const Gens&... gens) {
  static_assert(sizeof...(Gens) >= 1 && sizeof...(Gens) <= 5,
                "GenCons takes between one and five generators");
  auto shared = std::make_shared<const C>(std::move(c));
  auto tree = internal::GenConsImpl(shared, std::tuple<>(), gens...);
  using R = typename decltype(tree)::value_type;
  std::string name = "cons(";
  ((name += gens.name + ","), ...);
  name.back() = ')';
  return Generator<R>{std::move(tree), std::move(name)};
}

template <typename C, typename G1>
auto GenCons1(C c, const G1& g1) {
  return GenCons(std::move(c), g1);
}
template <typename C, typename G1, typename G2>
auto GenCons2(C c, const G1& g1, const G2& g2) {
  return GenCons(std::move(c), g1, g2);
}
template <typename C, typename G1, typename G2, typename G3>
auto GenCons3(C c, const G1& g1, const G2& g2, const G3& g3) {
  return GenCons(std::move(c), g1, g2, g3);
}
template <typename C, typename G1, typename G2, typename G3, typename G4>
auto GenCons4(C c, const G1& g1, const G2& g2, const G3& g3, const G4& g4) {
  return GenCons(std::move(c), g1, g2, g3, g4);
}
template <typename C, typename G1, typename G2, typename G3, typename G4,
          typename G5>
auto GenCons5(C c, const G1& g1, const G2& g2, const G3& g3, const G4& g4,
              const G5& g5) {
  return GenCons(std::move(c), g1, g2, g3, g4, g5);
}

// Choice between two generators.
template <typename A>
Generator<A> Alt(Generator<A> a, Generator<A> b) {
  return {Or(std::move(a.tree), std::move(b.tree)), a.name + "|||" + b.name};
}

template <typename A>
Generator<A> operator||(Generator<A> a, Generator<A> b) {
  return Alt(std::move(a), std::move(b));
}

// Defers construction of a generator until its tree is first forced. This is
// how recursive generators are written:
//
//   Generator<Nat> GenNat() {
//     return Alt(GenCons0(Nat::Z()), GenCons1(Nat::S, Lazy(GenNat, "nat")));
//   }
template <typename A>
Generator<A> Lazy(std::function<Generator<A>()> make, std::string name) {
  return {Defer<A>([make = std::move(make)] { return make().tree; }),
          std::move(name)};
}

template <typename F>
auto Lazy(F make, std::string name) {
  using G = std::invoke_result_t<F&>;
  using A = typename G::value_type;
  return Lazy<A>(std::function<Generator<A>()>(std::move(make)),
                 std::move(name));
}

template <typename A>
Generator<A> FailGen() {
  return {Fail<A>(), "fail"};
}

// Every integer >= 1 exactly once, as a balanced binary tree: below n sit the
// subtrees for 2n and 2n+1, so k-bit numbers are at level 2k-1 in ascending
// order. Numbers stop at 63 bits; the tree below them has no values.
Generator<Int> GenPositive();

// Every integer exactly once: 0, then negative and positive magnitudes drawn
// from GenPositive().
Generator<Int> GenInt();
Generator<bool> GenBool();
Generator<Ordering> GenOrdering();
// Printable ASCII, 0x20 through 0x7E.
Generator<char> GenChar();

namespace internal {

// The tree of [] ||| cons(g, ListOf(g)) with every value prefixed by
// `prefix`. Extending a prefix keeps each continuation at the top level, so
// forcing a node deep in the tree costs the same as forcing one near the
// root; nesting cons binds instead would cost one step per list element.
template <typename A>
SearchTree<std::vector<A>> ListsExtending(
    std::shared_ptr<const SearchTree<A>> elems, std::vector<A> prefix) {
  auto longer = Bind(*elems, [elems, prefix](const A& x) {
    std::vector<A> next = prefix;
    next.push_back(x);
    return Defer<std::vector<A>>([elems, next = std::move(next)] {
      return ListsExtending(elems, next);
    });
  });
  return Or(Value(std::move(prefix)), std::move(longer));
}

}  // namespace internal

// Lists over an element generator: [] ||| cons(g, ListOf(g)).
template <typename A>
Generator<std::vector<A>> ListOf(const Generator<A>& g) {
  auto elems = std::make_shared<const SearchTree<A>>(g.tree);
  return {Defer<std::vector<A>>([elems] {
            return internal::ListsExtending(elems, std::vector<A>{});
          }),
          "[" + g.name + "]"};
}

template <typename A, typename B>
Generator<std::tuple<A, B>> PairOf(const Generator<A>& a,
                                   const Generator<B>& b) {
  auto g = GenCons2([](const A& x, const B& y) { return std::tuple<A, B>(x, y); },
                    a, b);
  g.name = "(" + a.name + "," + b.name + ")";
  return g;
}

template <typename... Ts>
Generator<std::tuple<Ts...>> TupleOf(const Generator<Ts>&... gs) {
  auto g = GenCons([](const Ts&... xs) { return std::tuple<Ts...>(xs...); },
                   gs...);
  std::string name = "(";
  ((name += gs.name + ","), ...);
  name.back() = ')';
  g.name = std::move(name);
  return g;
}

// Default generators by type, used when a property does not name one.
// Specialize for user-defined types.
template <typename T>
struct Arbitrary;

template <>
struct Arbitrary<bool> {
  static Generator<bool> Get() { return GenBool(); }
};
template <>
struct Arbitrary<Ordering> {
  static Generator<Ordering> Get() { return GenOrdering(); }
};
template <>
struct Arbitrary<Int> {
  static Generator<Int> Get() { return GenInt(); }
};
template <>
struct Arbitrary<char> {
  static Generator<char> Get() { return GenChar(); }
};
template <typename T>
struct Arbitrary<std::vector<T>> {
  static Generator<std::vector<T>> Get() {
    return ListOf(Arbitrary<T>::Get());
  }
};
template <typename... Ts>
struct Arbitrary<std::tuple<Ts...>> {
  static Generator<std::tuple<Ts...>> Get() {
    return TupleOf(Arbitrary<Ts>::Get()...);
  }
};

template <typename T>
Generator<T> ArbitraryOf() {
  return Arbitrary<T>::Get();
}

}  // namespace ndcheck

#endif  // NDCHECK_GEN_H_
