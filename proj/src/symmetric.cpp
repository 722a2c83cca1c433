#include "apery/symmetric.hpp"

#include <string>

#include "apery/errors.hpp"

namespace apery {

std::vector<Rational> elementary_all(std::span<const Rational> xs) {
  // coefficients of prod (1 + x_i t), built one factor at a time
  std::vector<Rational> e(xs.size() + 1);
  e[0] = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += xs[i] * e[k - 1];
  return e;
}

Rational elementary(int k, std::span<const Rational> xs) {
  if (k < 0 || static_cast<std::size_t>(k) > xs.size()) return 0;
  if (k == 0) return 1;
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1);
  e[0] = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::size_t top = std::min<std::size_t>(i + 1, static_cast<std::size_t>(k));
    for (std::size_t j = top; j >= 1; --j) e[j] += xs[i] * e[j - 1];
  }
  return e[static_cast<std::size_t>(k)];
}

Rational complete(int k, std::span<const Rational> xs) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  // h[j] over the first i variables; h_j(x_1..x_i) = h_j(x_1..x_{i-1}) + x_i h_{j-1}(x_1..x_i)
  std::vector<Rational> h(static_cast<std::size_t>(k) + 1);
  h[0] = 1;
  for (const auto& x : xs)
    for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j) h[j] += x * h[j - 1];
  return h[static_cast<std::size_t>(k)];
}

Poly product_poly(std::span<const Rational> xs, int sign) {
  if (sign != 1 && sign != -1) throw ArgumentError("product_poly: sign must be +1 or -1");
  std::vector<Rational> c{Rational(1)};
  for (const auto& x : xs) {
    const Rational a = sign * x;
    c.emplace_back(0);
    for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] = c[k - 1] + a * c[k];
    c[0] *= a;
  }
  return Poly(std::move(c));
}

std::vector<Rational> lagrange_weights(std::span<const Rational> nodes) {
  if (nodes.empty()) throw ArgumentError("divided_difference: no nodes");
  std::vector<Rational> w(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Rational den = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k == j) continue;
      Rational d = nodes[j] - nodes[k];
      if (d == 0)
        throw ArgumentError("confluent nodes unsupported: node " + to_string(nodes[j]) + " repeated");
      den *= d;
    }
    w[j] = 1 / den;
  }
  return w;
}

Rational divided_difference(const Poly& w, std::span<const Rational> nodes) {
  const auto weights = lagrange_weights(nodes);
  Rational s = 0;
  for (std::size_t j = 0; j < nodes.size(); ++j) s += weights[j] * w(nodes[j]);
  return s;
}

RecurrenceSides e_recurrence(std::span<const Rational> xs, int k, RecurrenceForm form) {
  const auto p = xs.size();
  if (p < 2) throw ArgumentError("e_recurrence: need at least two variables");
  RecurrenceSides out;
  out.lhs = elementary(k, xs.subspan(1)) - elementary(k, xs.first(p - 1));
  const int order = form == RecurrenceForm::corrected ? k - 1 : k;
  out.rhs = (xs[p - 1] - xs[0]) * elementary(order, xs.subspan(1, p - 2));
  return out;
}

bool e_recurrence_check(std::span<const Rational> xs, int k) { return e_recurrence(xs, k).holds(); }

RecurrenceSides h_recurrence(std::span<const Rational> xs, int k) {
  const auto p = xs.size();
  if (p < 2) throw ArgumentError("h_recurrence: need at least two variables");
  RecurrenceSides out;
  out.lhs = complete(k, xs.subspan(1)) - complete(k, xs.first(p - 1));
  out.rhs = (xs[p - 1] - xs[0]) * complete(k - 1, xs);
  return out;
}

bool h_recurrence_check(std::span<const Rational> xs, int k) { return h_recurrence(xs, k).holds(); }

std::vector<Rational> inverse_product_series(std::span<const Rational> xs, unsigned order) {
  // z^p prod (z - x)^{-1} = prod (1 - x u)^{-1} with u = 1/z
  std::vector<Rational> acc(order + 1);
  acc[0] = 1;
  for (const auto& x : xs) {
    std::vector<Rational> geom(order + 1);
    geom[0] = 1;
    for (unsigned j = 1; j <= order; ++j) geom[j] = geom[j - 1] * x;
    std::vector<Rational> next(order + 1);
    for (unsigned a = 0; a <= order; ++a)
      for (unsigned b = 0; a + b <= order; ++b) next[a + b] += acc[a] * geom[b];
    acc = std::move(next);
  }
  return acc;
}

}  // namespace apery
