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

#ifndef NDCHECK_ENUMERATE_H_
#define NDCHECK_ENUMERATE_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ndcheck/search_tree.h"

namespace ndcheck {

enum class StrategyKind {
  kBreadthFirst,
  kLevelDiagonal,
  kRandomLevelDiagonal,
};

inline constexpr std::size_t kDefaultNodeBudget = 100'000;

// How a search tree is linearized into a value sequence.
//
// kBreadthFirst emits values in level order. kLevelDiagonal numbers the nodes
// of each level (number of Or edges above them) left to right and walks the
// (level, index) grid along anti-diagonals, emitting the Value nodes it meets:
// node i of level l is visited on diagonal l + i.
//
// kRandomLevelDiagonal cuts the tree five levels below the root into up to 32
// subtrees, walks each like kLevelDiagonal with the children of every Or node
// swapped on a fair coin flip, and takes values from the walks in turn. All
// flips come from a 64-bit Mersenne Twister seeded with `seed`.
struct Strategy {
  StrategyKind kind = StrategyKind::kRandomLevelDiagonal;
  std::uint64_t seed = 0;
  // Node expansions allowed per enumeration. Each deferred step and each
  // split of an Or node into its children costs one expansion.
  std::size_t node_budget = kDefaultNodeBudget;

  static Strategy BreadthFirst(std::size_t budget = kDefaultNodeBudget) {
    return {StrategyKind::kBreadthFirst, 0, budget};
  }
  static Strategy LevelDiagonal(std::size_t budget = kDefaultNodeBudget) {
    return {StrategyKind::kLevelDiagonal, 0, budget};
  }
  static Strategy RandomLevelDiagonal(std::uint64_t seed,
                                      std::size_t budget = kDefaultNodeBudget) {
    return {StrategyKind::kRandomLevelDiagonal, seed, budget};
  }

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// "bfs", "diag", "rdiag".
std::string_view StrategyName(StrategyKind kind);
std::optional<StrategyKind> ParseStrategyName(std::string_view name);

template <typename A>
struct EnumOutcome {
  std::vector<A> values;
  // The whole tree was expanded; `values` holds every leaf.
  bool exhausted = false;
  bool budget_exceeded = false;
};

namespace internal {

// Node expansions shared by all walks of one enumeration.
struct ExpansionBudget {
  std::size_t limit;
  std::size_t used = 0;
  bool exceeded = false;

  bool Charge(std::size_t n = 1) {
    if (used + n > limit) {
      exceeded = true;
      return false;
    }
    used += n;
    return true;
  }
};

// Forces `t` to a Value, Fail, or Or node in place, one expansion per
// deferred step. On budget exhaustion the partially forced node stays in
// `t`, so the work is not repeated.
template <typename A>
bool Force(SearchTree<A>& t, ExpansionBudget& budget) {
  while (t.IsLazy()) {
    if (!budget.Charge()) return false;
    t = t.Step();
  }
  return true;
}

// The level diagonal walk over one tree. With a generator, the children of
// every split Or node are swapped on a coin flip.
template <typename A>
class DiagonalWalk {
 public:
  DiagonalWalk(SearchTree<A> tree, ExpansionBudget* budget,
               std::optional<std::uint64_t> seed)
      : budget_(budget) {
    if (seed) rng_.emplace(*seed);
    levels_.emplace_back();
    levels_[0].nodes.push_back(std::move(tree));
    levels_[0].complete = true;
  }

  // nullopt with exhausted() unset means the budget ran out.
  std::optional<A> Next() {
    while (!exhausted_) {
      if (position_ > diagonal_) {
        ++diagonal_;
        position_ = 0;
      }
      if (position_ == 0 && Done()) {
        exhausted_ = true;
        break;
      }
      const std::size_t l = position_;
      if (empty_level_ && l >= *empty_level_) {
        position_ = diagonal_ + 1;
        continue;
      }
      const std::size_t index = diagonal_ - l;
      const Fetch f = Materialize(l, index);
      if (f == Fetch::kBudget) return std::nullopt;
      ++position_;
      if (f == Fetch::kAbsent) {
        if (levels_[l].size() == 0 && (!empty_level_ || l < *empty_level_)) {
          empty_level_ = l;
        }
        continue;
      }
      levels_[l].visited = index + 1;
      SearchTree<A>& t = levels_[l].at(index);
      std::optional<A> out;
      if (t.IsValue()) out = t.value();
      Prune(l);
      if (out) return out;
    }
    return std::nullopt;
  }

  bool exhausted() const { return exhausted_; }

 private:
  // Nodes of one tree level, in left-to-right order. Nodes before `base` were
  // both visited by the walk and consumed as parents, and have been dropped.
  struct Level {
    std::deque<SearchTree<A>> nodes;
    std::size_t base = 0;
    // Nodes of the level above already split into this level.
    std::size_t parent_cursor = 0;
    // Indices below this were visited by the diagonal walk.
    std::size_t visited = 0;
    // No further nodes will be added.
    bool complete = false;

    std::size_t size() const { return base + nodes.size(); }
    SearchTree<A>& at(std::size_t i) { return nodes[i - base]; }
  };

  enum class Fetch { kNode, kAbsent, kBudget };

  // Makes node `i` of level `l` available in head form, splitting Or nodes of
  // the level above as needed.
  Fetch Materialize(std::size_t l, std::size_t i) {
    while (levels_.size() <= l) levels_.emplace_back();
    while (levels_[l].size() <= i) {
      if (levels_[l].complete) return Fetch::kAbsent;
      const std::size_t pi = levels_[l].parent_cursor;
      const Fetch f = Materialize(l - 1, pi);
      if (f == Fetch::kBudget) return f;
      if (f == Fetch::kAbsent) {
        levels_[l].complete = true;
        return f;
      }
      SearchTree<A>& p = levels_[l - 1].at(pi);
      if (p.IsOr()) {
        if (!budget_->Charge()) return Fetch::kBudget;
        const bool swap = rng_ && ((*rng_)() >> 63) != 0;
        levels_[l].nodes.push_back(swap ? p.right() : p.left());
        levels_[l].nodes.push_back(swap ? p.left() : p.right());
      }
      ++levels_[l].parent_cursor;
      Prune(l - 1);
    }
    return Force(levels_[l].at(i), *budget_) ? Fetch::kNode : Fetch::kBudget;
  }

  // Drops leading nodes of level `l` nobody will look at again.
  void Prune(std::size_t l) {
    Level& level = levels_[l];
    const std::size_t consumed =
        l + 1 < levels_.size() ? levels_[l + 1].parent_cursor : 0;
    const std::size_t limit = std::min(level.visited, consumed);
    while (level.base < limit && !level.nodes.empty()) {
      level.nodes.pop_front();
      ++level.base;
    }
  }

  // True once a finite tree is fully walked: some level is empty and every
  // node above it was visited.
  bool Done() const {
    if (!empty_level_) return false;
    for (std::size_t l = 0; l < *empty_level_; ++l) {
      if (!levels_[l].complete || levels_[l].size() > levels_[l].visited) {
        return false;
      }
    }
    return true;
  }

  ExpansionBudget* budget_;
  std::optional<std::mt19937_64> rng_;
  std::vector<Level> levels_;
  std::size_t diagonal_ = 0;
  std::size_t position_ = 0;
  std::optional<std::size_t> empty_level_;
  bool exhausted_ = false;
};

}  // namespace internal

// Pull-based enumeration of a search tree. Each call to Next() does only the
// work needed to produce the next value. When the node budget runs out Next()
// returns nullopt with budget_exceeded() set; GrantBudget() lets the caller
// resume from the same position.
//
// Leaf multiplicity is preserved: a tree with two Value(1) leaves yields 1
// twice.
template <typename A>
class Enumerator {
 public:
  // Depth at which kRandomLevelDiagonal splits the tree into independently
  // walked subtrees.
  static constexpr int kSplitDepth = 5;

  Enumerator(SearchTree<A> tree, const Strategy& strategy)
      : kind_(strategy.kind), budget_{strategy.node_budget}, rng_(strategy.seed) {
    switch (kind_) {
      case StrategyKind::kBreadthFirst:
        queue_.push_back(std::move(tree));
        break;
      case StrategyKind::kLevelDiagonal:
        walks_.emplace_back(std::move(tree), &budget_, std::nullopt);
        split_depth_ = kSplitDepth;
        break;
      case StrategyKind::kRandomLevelDiagonal:
        split_.push_back(std::move(tree));
        break;
    }
  }

  std::optional<A> Next() {
    if (exhausted_) return std::nullopt;
    budget_.exceeded = false;
    return kind_ == StrategyKind::kBreadthFirst ? NextBreadthFirst()
                                                : NextInterleaved();
  }

  bool exhausted() const { return exhausted_; }
  bool budget_exceeded() const { return budget_.exceeded; }
  std::size_t expansions() const { return budget_.used; }
  std::size_t budget() const { return budget_.limit; }

  void GrantBudget(std::size_t extra) { budget_.limit += extra; }

 private:
  std::optional<A> NextBreadthFirst() {
    while (!queue_.empty()) {
      if (!internal::Force(queue_.front(), budget_)) return std::nullopt;
      if (queue_.front().IsOr() && !budget_.Charge()) return std::nullopt;
      SearchTree<A> t = std::move(queue_.front());
      queue_.pop_front();
      if (t.IsValue()) return t.value();
      if (t.IsOr()) {
        queue_.push_back(t.left());
        queue_.push_back(t.right());
      }
    }
    exhausted_ = true;
    return std::nullopt;
  }

  // Replaces the tree by its nodes kSplitDepth levels down (shallower leaves
  // kept in place, Fail leaves dropped) and starts one seeded walk per node.
  bool Split() {
    while (split_depth_ < kSplitDepth) {
      std::size_t ors = 0;
      for (auto& t : split_) {
        if (!internal::Force(t, budget_)) return false;
        ors += t.IsOr() ? 1 : 0;
      }
      if (!budget_.Charge(ors)) return false;
      std::vector<SearchTree<A>> next;
      for (const auto& t : split_) {
        if (t.IsOr()) {
          const bool swap = (rng_() >> 63) != 0;
          next.push_back(swap ? t.right() : t.left());
          next.push_back(swap ? t.left() : t.right());
        } else if (t.IsValue()) {
          next.push_back(t);
        }
      }
      split_ = std::move(next);
      ++split_depth_;
    }
    for (auto& t : split_) walks_.emplace_back(std::move(t), &budget_, rng_());
    split_.clear();
    return true;
  }

  // Round robin over the walks: the first value of each, then the second of
  // each, and so on, skipping walks that have run dry.
  std::optional<A> NextInterleaved() {
    if (split_depth_ < kSplitDepth && !Split()) return std::nullopt;
    while (!walks_.empty()) {
      if (cursor_ >= walks_.size()) cursor_ = 0;
      auto& walk = walks_[cursor_];
      std::optional<A> v = walk.Next();
      if (v) {
        ++cursor_;
        return v;
      }
      if (!walk.exhausted()) return std::nullopt;
      walks_.erase(walks_.begin() + static_cast<std::ptrdiff_t>(cursor_));
    }
    exhausted_ = true;
    return std::nullopt;
  }

  StrategyKind kind_;
  internal::ExpansionBudget budget_;
  std::mt19937_64 rng_;
  bool exhausted_ = false;

  std::deque<SearchTree<A>> queue_;

  std::vector<SearchTree<A>> split_;
  int split_depth_ = 0;
  std::vector<internal::DiagonalWalk<A>> walks_;
  std::size_t cursor_ = 0;
};

// Runs an enumeration to completion or until the budget is spent.
template <typename A>
EnumOutcome<A> Enumerate(SearchTree<A> tree, const Strategy& strategy) {
  Enumerator<A> e(std::move(tree), strategy);
  EnumOutcome<A> out;
  while (auto v = e.Next()) out.values.push_back(std::move(*v));
  out.exhausted = e.exhausted();
  out.budget_exceeded = e.budget_exceeded();
  return out;
}

// The first min(n, available) values of the enumeration.
template <typename A>
std::vector<A> TakeValues(SearchTree<A> tree, const Strategy& strategy,
                          std::size_t n) {
  std::vector<A> out;
  if (n == 0) return out;
  Enumerator<A> e(std::move(tree), strategy);
  while (out.size() < n) {
    auto v = e.Next();
    if (!v) break;
    out.push_back(std::move(*v));
  }
  return out;
}

}  // namespace ndcheck

#endif  // NDCHECK_ENUMERATE_H_
