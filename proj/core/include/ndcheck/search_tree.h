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

#ifndef NDCHECK_SEARCH_TREE_H_
#define NDCHECK_SEARCH_TREE_H_

#include <functional>
#include <memory>
#include <type_traits>
#include <utility>
#include <variant>

namespace ndcheck {

// The result set of a non-deterministic computation. A tree is a Value leaf,
// a Fail leaf, or a binary choice between two subtrees. Subtrees may be
// deferred, which is how infinite trees (e.g. all natural numbers) are built:
// nothing below a Lazy node exists until an enumerator forces it.
//
// Trees are immutable and cheap to copy; copies share structure.
template <typename A>
class SearchTree {
 public:
  struct ValueNode {
    A value;
  };
  struct FailNode {};
  struct OrNode {
    SearchTree left;
    SearchTree right;
  };
  struct LazyNode {
    std::function<SearchTree()> thunk;
  };

  using value_type = A;

  // A default-constructed tree has no values.
  SearchTree() : SearchTree(FailNode{}) {}

  static SearchTree Value(A a) { return SearchTree(ValueNode{std::move(a)}); }
  static SearchTree Fail() { return SearchTree(FailNode{}); }
  static SearchTree Or(SearchTree l, SearchTree r) {
    return SearchTree(OrNode{std::move(l), std::move(r)});
  }
  // The thunk runs every time the node is forced; results are not memoized.
  static SearchTree Defer(std::function<SearchTree()> thunk) {
    return SearchTree(LazyNode{std::move(thunk)});
  }

  bool IsValue() const { return std::holds_alternative<ValueNode>(node_->v); }
  bool IsFail() const { return std::holds_alternative<FailNode>(node_->v); }
  bool IsOr() const { return std::holds_alternative<OrNode>(node_->v); }
  bool IsLazy() const { return std::holds_alternative<LazyNode>(node_->v); }

  const A& value() const { return std::get<ValueNode>(node_->v).value; }
  const SearchTree& left() const { return std::get<OrNode>(node_->v).left; }
  const SearchTree& right() const { return std::get<OrNode>(node_->v).right; }

  // Runs one deferred step. Only valid on Lazy nodes.
  SearchTree Step() const { return std::get<LazyNode>(node_->v).thunk(); }

 private:
  struct Node;
  template <typename N>
  explicit SearchTree(N n) : node_(std::make_shared<const Node>(Node{std::move(n)})) {}

  std::shared_ptr<const Node> node_;
};

template <typename A>
struct SearchTree<A>::Node {
  std::variant<ValueNode, FailNode, OrNode, LazyNode> v;
};

template <typename A>
SearchTree<A> Value(A a) {
  return SearchTree<A>::Value(std::move(a));
}

template <typename A>
SearchTree<A> Fail() {
  return SearchTree<A>::Fail();
}

template <typename A>
SearchTree<A> Or(SearchTree<A> l, SearchTree<A> r) {
  return SearchTree<A>::Or(std::move(l), std::move(r));
}

template <typename A>
SearchTree<A> Defer(std::function<SearchTree<A>()> thunk) {
  return SearchTree<A>::Defer(std::move(thunk));
}

// Choice over a list of alternatives, arranged as a balanced Or tree so that
// k alternatives sit at depth about log2(k). An empty list is Fail.
template <typename A, typename It>
SearchTree<A> Choice(It first, It last) {
  const auto n = std::distance(first, last);
  if (n == 0) return Fail<A>();
  if (n == 1) return *first;
  It mid = std::next(first, n / 2);
  return Or(Choice<A>(first, mid), Choice<A>(mid, last));
}

namespace internal {

template <typename T>
struct IsSearchTree : std::false_type {};
template <typename A>
struct IsSearchTree<SearchTree<A>> : std::true_type {};

template <typename A, typename B>
SearchTree<B> BindShared(
    SearchTree<A> t,
    std::shared_ptr<const std::function<SearchTree<B>(const A&)>> f) {
  return Defer<B>([t = std::move(t), f]() -> SearchTree<B> {
    if (t.IsValue()) return (*f)(t.value());
    if (t.IsFail()) return Fail<B>();
    if (t.IsOr()) return Or(BindShared(t.left(), f), BindShared(t.right(), f));
    return BindShared(t.Step(), f);
  });
}

}  // namespace internal

// Replaces every Value leaf `a` by the tree `f(a)`, keeping Fail leaves and
// the Or structure. Lazy: nothing is evaluated until the result is forced.
template <typename A, typename F>
auto Bind(SearchTree<A> t, F&& f) {
  using R = std::invoke_result_t<F&, const A&>;
  static_assert(internal::IsSearchTree<R>::value,
                "Bind continuation must return a SearchTree");
  using B = typename R::value_type;
  auto shared = std::make_shared<const std::function<SearchTree<B>(const A&)>>(
      std::forward<F>(f));
  return internal::BindShared<A, B>(std::move(t), std::move(shared));
}

// Maps a function over every Value leaf.
template <typename A, typename F>
auto Map(SearchTree<A> t, F&& f) {
  using B = std::decay_t<std::invoke_result_t<F&, const A&>>;
  return Bind(std::move(t),
              [f = std::forward<F>(f)](const A& a) { return Value<B>(f(a)); });
}

}  // namespace ndcheck

#endif  // NDCHECK_SEARCH_TREE_H_
