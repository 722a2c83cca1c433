// Brute-force reference implementations used by the tests. Deliberately
// naive and independent of the library code paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "apery/rational.hpp"

namespace oracle {

using apery::Rational;

/// Members of <gens> up to limit, by repeated addition.
inline std::vector<bool> members(const std::vector<std::int64_t>& gens, std::int64_t limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
  in[0] = true;
  for (std::int64_t x = 1; x <= limit; ++x)
    for (auto g : gens)
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = true;
        break;
      }
  return in;
}

/// Gaps of <gens>; requires gcd 1. Scans well past the Frobenius bound.
inline std::vector<std::int64_t> gaps(const std::vector<std::int64_t>& gens) {
  const auto mx = *std::max_element(gens.begin(), gens.end());
  const auto limit = mx * mx + 2 * mx;
  const auto in = members(gens, limit);
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x <= limit; ++x)
    if (!in[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

inline bool is_gap(const std::vector<std::int64_t>& gaps, std::int64_t x) {
  return std::find(gaps.begin(), gaps.end(), x) != gaps.end();
}

/// Least member in each residue class mod m, by linear scan.
inline std::vector<std::int64_t> apery(const std::vector<std::int64_t>& gaps, std::int64_t m) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(m), -1);
  for (std::int64_t x = 0, found = 0; found < m; ++x)
    if (!is_gap(gaps, x) && out[static_cast<std::size_t>(x % m)] < 0) {
      out[static_cast<std::size_t>(x % m)] = x;
      ++found;
    }
  return out;
}

/// Calls fn(mask) for every subset of {0..n-1} with popcount k.
inline void subsets(std::size_t n, std::size_t k, const std::function<void(std::uint32_t)>& fn) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) fn(mask);
}

inline std::vector<Rational> pick(const std::vector<Rational>& xs, std::uint32_t mask) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (mask & (1u << i)) out.push_back(xs[i]);
  return out;
}

/// Sum over k-subsets of the product of their elements.
inline Rational elementary(std::size_t k, const std::vector<Rational>& xs) {
  if (k > xs.size()) return 0;
  Rational s = 0;
  subsets(xs.size(), k, [&](std::uint32_t mask) {
    Rational p = 1;
    for (const auto& x : pick(xs, mask)) p *= x;
    s += p;
  });
  return s;
}

/// Sum over nondecreasing index tuples of length k.
inline Rational complete(int k, const std::vector<Rational>& xs) {
  if (k < 0) return 0;
  Rational s = 0;
  std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t from, int left, Rational acc) {
    if (left == 0) {
      s += acc;
      return;
    }
    for (std::size_t i = from; i < xs.size(); ++i) rec(i, left - 1, acc * xs[i]);
  };
  rec(0, k, Rational(1));
  return s;
}

/// Leibniz expansion over all permutations.
inline Rational determinant(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// sum_j w(x_j) / prod_{k != j} (x_j - x_k) with w = sum coeffs[d] z^d.
inline Rational lagrange(const std::vector<Rational>& coeffs, const std::vector<Rational>& nodes) {
  Rational s = 0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Rational w = 0, xp = 1;
    for (const auto& c : coeffs) {
      w += c * xp;
      xp *= nodes[j];
    }
    Rational den = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      if (k != j) den *= nodes[j] - nodes[k];
    s += w / den;
  }
  return s;
}

/// [x]_q.
inline long double qnum(long double x, long double q) { return (std::pow(q, x) - 1.0L) / (q - 1.0L); }

/// Fixed-length partial sum of the q-Bernoulli coefficient series, with each
/// c_n formed from its full product rather than by recurrence.
inline long double base_series(int k, long double t, long double q, long double lambda, int alpha, int terms) {
  if (k < alpha) return 0;
  long double s = 0;
  for (int n = 0; n < terms; ++n) {
    long double c = 1;
    for (int j = 1; j <= n; ++j) c *= qnum(alpha + j - 1, q) / qnum(j, q);
    s += c * std::pow(lambda, n) * std::pow(q, n + t) * std::pow(qnum(n + t, q), k - alpha);
  }
  long double pre = alpha % 2 ? -1 : 1;
  for (int j = 0; j < alpha; ++j) pre *= k - j;
  return pre * s;
}

/// The shifted family at t from base values at t - 1, by its defining sum.
inline long double shifted_series(int n, long double t, long double q, int l, long double y, long double lambda,
                                  int alpha, int terms) {
  const long double ql = std::pow(q, l);
  long double s = 0;
  for (int k = 0; k <= n; ++k) {
    long double binom = 1;
    for (int j = 1; j <= k; ++j) binom = binom * (n - j + 1) / j;
    s += binom * std::pow(q, l * (k - alpha + 1) * y) * std::pow(qnum(l, q), k) *
         base_series(k, t - 1, ql, lambda, alpha, terms);
  }
  return s;
}

}  // namespace oracle
