#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace apery {

/// Calls fn(indices) for every k-subset of {0, ..., n-1} in lexicographic
/// order; indices are ascending. k == 0 yields the empty subset once.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Same subsets and order, with a state carried down the prefix tree:
/// extend(parent, i, child) writes the state of prefix + {i} into child, and
/// leaf(state) runs once per k-subset. Shared prefixes are extended once.
template <class State, class Extend, class Leaf>
void for_each_combination_state(std::size_t n, std::size_t k, const State& root, Extend&& extend, Leaf&& leaf) {
  if (k > n) return;
  std::vector<State> level(k + 1);
  level[0] = root;
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == k) {
      leaf(level[k]);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      extend(level[depth], i, level[depth + 1]);
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace apery
