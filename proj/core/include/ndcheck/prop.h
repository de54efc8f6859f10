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

#ifndef NDCHECK_PROP_H_
#define NDCHECK_PROP_H_

#include <concepts>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ndcheck/enumerate.h"
#include "ndcheck/gen.h"
#include "ndcheck/search_tree.h"
#include "ndcheck/show.h"

namespace ndcheck {

enum class Status { kSatisfied, kFalsified, kDropped, kInconclusive };

std::string_view StatusName(Status s);

struct Outcome {
  Status status = Status::kSatisfied;
  // Observed values of the operands. Always set when Falsified.
  std::string results;
  // Why a verdict could not be reached. Set when Inconclusive.
  std::string diagnosis;
  // For ForAll: the element whose property decided the outcome.
  std::string witness;
  std::vector<std::string> labels;

  static Outcome Satisfied() { return {Status::kSatisfied, "", "", "", {}}; }
  static Outcome Dropped() { return {Status::kDropped, "", "", "", {}}; }
  static Outcome Falsified(std::string results) {
    return {Status::kFalsified, std::move(results), "", "", {}};
  }
  static Outcome Inconclusive(std::string diagnosis) {
    return {Status::kInconclusive, "", std::move(diagnosis), "", {}};
  }
};

inline constexpr std::size_t kDefaultValueBudget = 100'000;

struct EvalContext {
  // Order in which ForAll draws from a tree.
  Strategy strategy;
  // Order in which operand value sets are drawn. Set semantics makes the
  // order irrelevant to the outcome; breadth-first is complete and costs one
  // expansion per node, where a diagonal walk over a wide finite tree costs
  // quadratically many.
  Strategy operand_strategy = Strategy::BreadthFirst();
  // Raw values drawn per operand before giving up.
  std::size_t value_budget = kDefaultValueBudget;
  // Inputs a ForAll over an infinite generator examines.
  std::size_t for_all_limit = 100;
  // Where IO properties may create files.
  std::filesystem::path scratch_dir;
};

// A deferred check. Nothing is evaluated until Evaluate() is called, and
// evaluation is repeatable for everything except Returns().
class Prop {
 public:
  using Check = std::function<Outcome(const EvalContext&)>;

  Prop(std::string kind, Check check)
      : kind_(std::move(kind)), check_(std::move(check)) {}

  Outcome Evaluate(const EvalContext& ctx) const { return check_(ctx); }
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
  Check check_;
};

namespace internal {

// Values seen so far, without duplicates, in first-seen order.
template <typename A>
class DistinctValues {
 public:
  bool Insert(const A& a) {
    if constexpr (std::totally_ordered<A>) {
      if (!index_.insert(a).second) return false;
    } else {
      for (const A& v : values_) {
        if (v == a) return false;
      }
    }
    values_.push_back(a);
    return true;
  }

  bool Contains(const A& a) const {
    if constexpr (std::totally_ordered<A>) {
      return index_.count(a) > 0;
    } else {
      for (const A& v : values_) {
        if (v == a) return true;
      }
      return false;
    }
  }

  std::size_t size() const { return values_.size(); }
  const std::vector<A>& values() const { return values_; }

 private:
  std::vector<A> values_;
  std::conditional_t<std::totally_ordered<A>, std::set<A>, char> index_{};
};

template <typename A>
struct Drawn {
  DistinctValues<A> distinct;
  std::size_t raw = 0;
  bool exhausted = false;
  bool stopped = false;
  bool node_budget_exceeded = false;
  bool value_budget_exceeded = false;

  // The operand's value set is known: fully enumerated, or the caller's stop
  // condition fired.
  bool decided() const { return exhausted || stopped; }

  std::string ShowSet() const {
    const auto& vs = distinct.values();
    if (exhausted && vs.size() == 1) return ShowValue(vs.front());
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i > 0) out += ',';
      out += ShowValue(vs[i]);
    }
    if (!exhausted) out += vs.empty() ? "..." : ",...";
    return out + "}";
  }

  std::string BudgetReason(std::string_view side) const {
    std::string why = value_budget_exceeded ? "value budget" : "node budget";
    return std::string(side) + " exceeded the " + why + " after " +
           std::to_string(raw) + " values";
  }
};

// Enumerates `t`, calling `stop` after each new distinct value; a true
// result ends the draw early.
template <typename A, typename Stop>
Drawn<A> Draw(SearchTree<A> t, const EvalContext& ctx, Stop stop) {
  Drawn<A> d;
  Enumerator<A> e(std::move(t), ctx.operand_strategy);
  while (true) {
    auto v = e.Next();
    if (!v) break;
    if (d.raw == ctx.value_budget) {
      d.value_budget_exceeded = true;
      return d;
    }
    ++d.raw;
    if (d.distinct.Insert(*v) && stop(d.distinct, *v)) {
      d.stopped = true;
      return d;
    }
  }
  d.exhausted = e.exhausted();
  d.node_budget_exceeded = e.budget_exceeded();
  return d;
}

template <typename A>
Drawn<A> DrawAll(SearchTree<A> t, const EvalContext& ctx) {
  return Draw(std::move(t), ctx,
              [](const DistinctValues<A>&, const A&) { return false; });
}

template <typename T>
struct TreeOf {
  using type = T;
  static SearchTree<T> Lift(T v) { return Value(std::move(v)); }
};
template <typename A>
struct TreeOf<SearchTree<A>> {
  using type = A;
  static SearchTree<A> Lift(SearchTree<A> t) { return t; }
};

template <typename T>
auto AsTree(T&& x) {
  return TreeOf<std::decay_t<T>>::Lift(std::forward<T>(x));
}

template <typename T>
using TreeValue = typename TreeOf<std::decay_t<T>>::type;

}  // namespace internal

// Both operands have exactly one distinct value and the values are equal.
// Operands may be search trees or plain values.
//
// At most two distinct values are drawn per side: a side with two values, or
// an exhausted side with none, falsifies at once.
template <typename L, typename R>
Prop IsEqual(L lhs, R rhs) {
  using A = internal::TreeValue<L>;
  static_assert(std::is_same_v<A, internal::TreeValue<R>>,
                "IsEqual operands must have the same value type");
  auto l = internal::AsTree(std::move(lhs));
  auto r = internal::AsTree(std::move(rhs));
  return Prop("-=-", [l, r](const EvalContext& ctx) {
    auto two = [](const internal::DistinctValues<A>& s, const A&) {
      return s.size() >= 2;
    };
    auto dl = internal::Draw(l, ctx, two);
    auto dr = internal::Draw(r, ctx, two);
    auto evidence = [&] { return "(" + dl.ShowSet() + "," + dr.ShowSet() + ")"; };
    auto not_single = [](const internal::Drawn<A>& d) {
      return d.distinct.size() >= 2 || (d.exhausted && d.distinct.size() == 0);
    };
    if (not_single(dl) || not_single(dr)) return Outcome::Falsified(evidence());
    if (!dl.decided()) return Outcome::Inconclusive(dl.BudgetReason("left side"));
    if (!dr.decided()) return Outcome::Inconclusive(dr.BudgetReason("right side"));
    if (dl.distinct.values().front() == dr.distinct.values().front()) {
      return Outcome::Satisfied();
    }
    return Outcome::Falsified(evidence());
  });
}

// Both operands have the same set of values. Multiplicity is ignored, and
// both sides must be enumerated completely.
template <typename L, typename R>
Prop SameSet(L lhs, R rhs) {
  using A = internal::TreeValue<L>;
  static_assert(std::is_same_v<A, internal::TreeValue<R>>,
                "SameSet operands must have the same value type");
  auto l = internal::AsTree(std::move(lhs));
  auto r = internal::AsTree(std::move(rhs));
  return Prop("<~>", [l, r](const EvalContext& ctx) {
    auto dl = internal::DrawAll(l, ctx);
    if (!dl.exhausted) return Outcome::Inconclusive(dl.BudgetReason("left side"));
    auto dr = internal::DrawAll(r, ctx);
    if (!dr.exhausted) return Outcome::Inconclusive(dr.BudgetReason("right side"));
    bool same = dl.distinct.size() == dr.distinct.size();
    for (const A& v : dr.distinct.values()) {
      if (!same) break;
      same = dl.distinct.Contains(v);
    }
    if (same) return Outcome::Satisfied();
    return Outcome::Falsified("(" + dl.ShowSet() + "," + dr.ShowSet() + ")");
  });
}

// Every value of `rhs` is a value of `lhs`. The right side is enumerated
// completely; the left side only until all expected values were seen.
template <typename L, typename R>
Prop ReducesTo(L lhs, R rhs) {
  using A = internal::TreeValue<L>;
  static_assert(std::is_same_v<A, internal::TreeValue<R>>,
                "ReducesTo operands must have the same value type");
  auto l = internal::AsTree(std::move(lhs));
  auto r = internal::AsTree(std::move(rhs));
  return Prop("~>", [l, r](const EvalContext& ctx) {
    auto dr = internal::DrawAll(r, ctx);
    if (!dr.exhausted) return Outcome::Inconclusive(dr.BudgetReason("right side"));
    const std::size_t wanted = dr.distinct.size();
    if (wanted == 0) return Outcome::Satisfied();
    std::size_t found = 0;
    auto dl = internal::Draw(l, ctx, [&](const internal::DistinctValues<A>&, const A& v) {
      if (dr.distinct.Contains(v)) ++found;
      return found == wanted;
    });
    if (dl.stopped) return Outcome::Satisfied();
    if (!dl.exhausted) return Outcome::Inconclusive(dl.BudgetReason("left side"));
    return Outcome::Falsified("(" + dl.ShowSet() + "," + dr.ShowSet() + ")");
  });
}

// The operand has exactly `n` distinct values.
template <typename E>
Prop ValueCount(E expr, std::size_t n) {
  using A = internal::TreeValue<E>;
  auto t = internal::AsTree(std::move(expr));
  return Prop("#", [t, n](const EvalContext& ctx) {
    auto d = internal::Draw(t, ctx, [n](const internal::DistinctValues<A>& s, const A&) {
      return s.size() > n;
    });
    auto evidence = [&] { return "(" + d.ShowSet() + "," + std::to_string(n) + ")"; };
    if (d.distinct.size() > n) return Outcome::Falsified(evidence());
    if (!d.exhausted) return Outcome::Inconclusive(d.BudgetReason("operand"));
    if (d.distinct.size() == n) return Outcome::Satisfied();
    return Outcome::Falsified(evidence());
  });
}

// The operand has fewer than `n` distinct values. Falsified as soon as the
// n-th distinct value shows up.
template <typename E>
Prop ValueCountLess(E expr, std::size_t n) {
  using A = internal::TreeValue<E>;
  auto t = internal::AsTree(std::move(expr));
  return Prop("#<", [t, n](const EvalContext& ctx) {
    auto d = internal::Draw(t, ctx, [n](const internal::DistinctValues<A>& s, const A&) {
      return s.size() >= n;
    });
    if (d.distinct.size() >= n) {
      return Outcome::Falsified("(" + d.ShowSet() + "," + std::to_string(n) + ")");
    }
    if (!d.exhausted) return Outcome::Inconclusive(d.BudgetReason("operand"));
    return Outcome::Satisfied();
  });
}

// `cond` already evaluated: false drops the test case, true defers to `p`.
inline Prop Implies(bool cond, Prop p) {
  return Prop("==>", [cond, p = std::move(p)](const EvalContext& ctx) {
    if (!cond) return Outcome::Dropped();
    return p.Evaluate(ctx);
  });
}

// As above, but the property is only built when `cond` holds. Use this when
// building it would already diverge or fail for excluded inputs.
template <typename F>
  requires std::is_invocable_r_v<Prop, F&>
Prop Implies(bool cond, F make) {
  return Prop("==>", [cond, make = std::move(make)](const EvalContext& ctx) mutable {
    if (!cond) return Outcome::Dropped();
    return make().Evaluate(ctx);
  });
}

// Some value of the operand is True.
template <typename E>
Prop Eventually(E expr) {
  static_assert(std::is_same_v<internal::TreeValue<E>, bool>);
  auto t = internal::AsTree(std::move(expr));
  return Prop("eventually", [t](const EvalContext& ctx) {
    auto d = internal::Draw(t, ctx, [](const auto&, bool v) { return v; });
    if (d.stopped) return Outcome::Satisfied();
    if (!d.exhausted) return Outcome::Inconclusive(d.BudgetReason("operand"));
    return Outcome::Falsified(d.ShowSet());
  });
}

// All values of the operand are True, and there is at least one.
template <typename E>
Prop Always(E expr) {
  static_assert(std::is_same_v<internal::TreeValue<E>, bool>);
  auto t = internal::AsTree(std::move(expr));
  return Prop("always", [t](const EvalContext& ctx) {
    auto d = internal::Draw(t, ctx, [](const auto&, bool v) { return !v; });
    if (d.stopped) return Outcome::Falsified(d.ShowSet());
    if (!d.exhausted) return Outcome::Inconclusive(d.BudgetReason("operand"));
    if (d.distinct.size() == 0) return Outcome::Falsified("{}");
    return Outcome::Satisfied();
  });
}

namespace internal {

template <typename A, typename F>
Outcome ForAllValues(const std::vector<A>& values, const F& pf,
                     const EvalContext& ctx) {
  std::vector<std::string> labels;
  for (const A& v : values) {
    Prop p = pf(v);
    Outcome o = p.Evaluate(ctx);
    labels.insert(labels.end(), o.labels.begin(), o.labels.end());
    if (o.status == Status::kFalsified || o.status == Status::kInconclusive) {
      o.witness = ShowValue(v);
      o.labels = std::move(labels);
      return o;
    }
  }
  Outcome ok = Outcome::Satisfied();
  ok.labels = std::move(labels);
  return ok;
}

}  // namespace internal

// `pf` holds for every element. Dropped elements are skipped; the first
// falsified (or inconclusive) element decides and is recorded as witness.
template <typename A, typename F>
Prop ForAll(std::vector<A> values, F pf) {
  return Prop("forAll", [values = std::move(values), pf = std::move(pf)](
                            const EvalContext& ctx) {
    return internal::ForAllValues(values, pf, ctx);
  });
}

// ForAll over the values of a tree, taking at most ctx.for_all_limit of them
// in strategy order.
template <typename A, typename F>
Prop ForAll(SearchTree<A> tree, F pf) {
  return Prop("forAll", [tree = std::move(tree), pf = std::move(pf)](
                            const EvalContext& ctx) {
    return internal::ForAllValues(TakeValues(tree, ctx.strategy, ctx.for_all_limit),
                                  pf, ctx);
  });
}

template <typename A, typename F>
Prop ForAll(Generator<A> gen, F pf) {
  return ForAll(std::move(gen.tree), std::move(pf));
}

// The effectful action completes and yields `expected`. An exception thrown
// by the action escapes Evaluate() and becomes an error verdict.
template <typename A>
Prop Returns(std::function<A(const EvalContext&)> action, A expected) {
  return Prop("returns", [action = std::move(action),
                          expected = std::move(expected)](const EvalContext& ctx) {
    A got = action(ctx);
    if (got == expected) return Outcome::Satisfied();
    return Outcome::Falsified("(" + ShowValue(got) + "," + ShowValue(expected) + ")");
  });
}

template <typename A>
Prop Returns(std::function<A()> action, A expected) {
  return Returns<A>(
      std::function<A(const EvalContext&)>(
          [action = std::move(action)](const EvalContext&) { return action(); }),
      std::move(expected));
}

// Attaches `label` to the outcome when `cond` holds.
inline Prop Classify(bool cond, std::string label, Prop p) {
  return Prop(p.kind(), [cond, label = std::move(label), p](const EvalContext& ctx) {
    Outcome o = p.Evaluate(ctx);
    if (cond) o.labels.push_back(label);
    return o;
  });
}

// Attaches the rendering of `v` to the outcome.
template <typename T>
Prop Collect(const T& v, Prop p) {
  return Classify(true, ShowValue(v), std::move(p));
}

}  // namespace ndcheck

#endif  // NDCHECK_PROP_H_
