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

#include <cstddef>
#include <vector>

#include "ndcheck/corpus/corpus.h"

namespace ndcheck::corpus {

bool Sorted(const std::vector<Int>& xs) {
  return std::is_sorted(xs.begin(), xs.end());
}

std::size_t Fac(std::size_t n) { return n <= 1 ? 1 : n * Fac(n - 1); }

Int SumUp(Int n) {
  // Iterative so that large inputs do not exhaust the stack.
  Int sum = 0;
  for (; n != 1; --n) sum += n;
  return sum + 1;
}

std::vector<Int> QuickSort(const std::vector<Int>& xs) {
  if (xs.empty()) return {};
  const Int pivot = xs.front();
  std::vector<Int> smaller, larger;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] < pivot) smaller.push_back(xs[i]);
    if (xs[i] > pivot) larger.push_back(xs[i]);
  }
  std::vector<Int> out = QuickSort(smaller);
  out.push_back(pivot);
  return Concat(std::move(out), QuickSort(larger));
}

SearchTree<std::vector<Int>> SortSpec(const std::vector<Int>& xs) {
  return Bind(Perm(xs), [](const std::vector<Int>& ys) {
    return Sorted(ys) ? Value(ys) : Fail<std::vector<Int>>();
  });
}

Generator<Nat> GenNat() {
  Generator<Nat> g = Alt(GenCons0(Nat::Z(), "Z"),
                         GenCons1(Nat::S, Lazy(GenNat, "Nat")));
  g.name = "Nat";
  return g;
}

}  // namespace ndcheck::corpus
