#include "apery/tree_path.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "apery/errors.hpp"

namespace apery {

CanonicalPath::CanonicalPath(const NumericalSemigroup& base, std::int64_t m) : m_(m) {
  if (m <= 0 || !base.contains(m))
    throw ArgumentError("canonical_path: m = " + std::to_string(m) + " is not a nonzero member of " +
                        base.describe());
  const auto& gaps = base.gaps();
  const std::size_t n = gaps.size();
  vertices_.reserve(n + 1);
  apery_.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    vertices_.push_back(NumericalSemigroup::from_gaps(std::span(gaps).first(i)));
    apery_.push_back(apery_set(vertices_.back(), m));
  }

  steps_.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::int64_t c = gaps[i - 1];
    if (vertices_[i].frobenius() != c)
      throw std::logic_error("canonical_path: F(S_" + std::to_string(i) + ") != c_" + std::to_string(i));
    const auto& cur = apery_[i].values;
    const auto& prev = apery_[i - 1].values;
    const auto r = static_cast<std::size_t>(c % m);
    if (cur[r] != c + m || prev[r] != c)
      throw std::logic_error("canonical_path: Apery update at step " + std::to_string(i) +
                             " does not swap c_i + m for c_i");
    PathStep step;
    step.frobenius_added = c;
    for (std::size_t j = 0; j < cur.size(); ++j) {
      if (j == r) continue;
      if (cur[j] != prev[j])
        throw std::logic_error("canonical_path: more than one Apery value changed at step " +
                               std::to_string(i));
      step.t_set.push_back(cur[j]);
    }
    std::sort(step.t_set.begin(), step.t_set.end());
    steps_.push_back(std::move(step));
  }
}

VertexFunction VertexFunction::on_path(
    const CanonicalPath& path,
    const std::function<Rational(std::size_t, const NumericalSemigroup&, const AperySet&)>& fn) {
  VertexFunction h;
  for (std::size_t i = 0; i <= path.length(); ++i) h.values.push_back(fn(i, path.vertex(i), path.apery(i)));
  return h;
}

namespace {

void check_total(const VertexFunction& h, const CanonicalPath& path) {
  if (h.values.size() != path.length() + 1)
    throw ArgumentError("vertex function has " + std::to_string(h.values.size()) + " values, path has " +
                        std::to_string(path.length() + 1) + " vertices");
}

}  // namespace

SidePair telescoping_sum(const VertexFunction& h, const CanonicalPath& path) {
  check_total(h, path);
  const auto n = path.length();
  SidePair out;
  for (std::size_t i = 0; i < n; ++i) out.lhs += h.values[i + 1] - h.values[i];
  out.rhs = h.values[n] - h.values[0];
  return out;
}

SidePair telescoping_product(const VertexFunction& h, const CanonicalPath& path) {
  check_total(h, path);
  for (std::size_t i = 0; i < h.values.size(); ++i)
    if (h.values[i] == 0)
      throw UndefinedFraction("telescoping_product: H(S_" + std::to_string(i) + ") = 0");
  const auto n = path.length();
  SidePair out{1, 0};
  for (std::size_t i = 0; i < n; ++i) out.lhs *= h.values[i + 1] / h.values[i];
  out.rhs = h.values[n] / h.values[0];
  return out;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

namespace {

std::vector<Rational> first_row_cofactors(const RationalMatrix& fixed_rows, std::size_t p) {
  std::vector<Rational> cof(p);
  for (std::size_t j = 0; j < p; ++j) {
    RationalMatrix minor;
    for (const auto& row : fixed_rows) {
      std::vector<Rational> r;
      for (std::size_t c = 0; c < p; ++c)
        if (c != j) r.push_back(row[c]);
      minor.push_back(std::move(r));
    }
    cof[j] = determinant(std::move(minor));
    if (j % 2 == 1) cof[j] = -cof[j];
  }
  return cof;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_shape(const RationalMatrix& fixed_rows, std::size_t p) {
  if (fixed_rows.size() + 1 != p)
    throw ArgumentError("fixed_rows must have p - 1 = " + std::to_string(p - 1) + " rows");
  for (const auto& row : fixed_rows)
    if (row.size() != p) throw ArgumentError("fixed_rows must have p = " + std::to_string(p) + " columns");
}

}  // namespace

Rational bordered_determinant(const std::vector<Rational>& first_row, const RationalMatrix& fixed_rows) {
  const auto p = first_row.size();
  if (p == 0) throw ArgumentError("bordered_determinant: empty first row");
  check_shape(fixed_rows, p);
  return dot(first_row, first_row_cofactors(fixed_rows, p));
}

SidePair determinant_relation(const VertexFunction& h, const CanonicalPath& path, std::size_t p,
                              const RationalMatrix& fixed_rows) {
  check_total(h, path);
  const auto n = path.length();
  if (p == 0 || p > n)
    throw ArgumentError("determinant_relation: need 0 < p <= n, got p = " + std::to_string(p) +
                        ", n = " + std::to_string(n));
  check_shape(fixed_rows, p);
  const auto cof = first_row_cofactors(fixed_rows, p);
  const auto& H = h.values;

  SidePair out;
  std::vector<Rational> row(p);
  for (std::size_t i = 0; i + p <= n; ++i) {
    for (std::size_t j = 1; j <= p; ++j) row[j - 1] = H[i + j] - H[i + j - 1];
    out.lhs += dot(row, cof);
  }
  for (std::size_t j = 1; j <= p; ++j) row[j - 1] = H[n - p + j] - H[j - 1];
  out.rhs = dot(row, cof);
  return out;
}

}  // namespace apery
