#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "apery/rational.hpp"
#include "apery/semigroup.hpp"

namespace apery {

/// One edge of the canonical path: S_i -> S_{i-1} = S_i with c_i adjoined.
struct PathStep {
  std::int64_t frobenius_added = 0;  // c_i = F(S_i)
  /// Apery set of S_i minus the value c_i + m (equivalently, of S_{i-1}
  /// minus c_i); m - 1 values, ascending.
  std::vector<std::int64_t> t_set;
};

/// The chain S = S_n, ..., S_0 = Z>=0 where S_i has gaps {c_1, ..., c_i}.
/// Vertices and their Apery sets are materialized eagerly and every
/// one-element Apery update is checked during construction.
class CanonicalPath {
 public:
  /// Throws ArgumentError unless m is a nonzero member of base.
  CanonicalPath(const NumericalSemigroup& base, std::int64_t m);

  std::int64_t m() const noexcept { return m_; }
  /// n = number of gaps of the base; the path has n + 1 vertices.
  std::size_t length() const noexcept { return vertices_.size() - 1; }
  const NumericalSemigroup& base() const noexcept { return vertices_.back(); }

  /// S_i for i in [0, n].
  const NumericalSemigroup& vertex(std::size_t i) const { return vertices_.at(i); }
  const AperySet& apery(std::size_t i) const { return apery_.at(i); }
  /// Step i in [1, n].
  const PathStep& step(std::size_t i) const { return steps_.at(i - 1); }

 private:
  std::int64_t m_;
  std::vector<NumericalSemigroup> vertices_;
  std::vector<AperySet> apery_;
  std::vector<PathStep> steps_;
};

inline CanonicalPath canonical_path(const NumericalSemigroup& s, std::int64_t m) { return {s, m}; }

/// H(S_i) for i = 0 .. n.
struct VertexFunction {
  std::vector<Rational> values;

  /// Evaluates fn(i, S_i, apery(S_i)) on every vertex.
  static VertexFunction on_path(
      const CanonicalPath& path,
      const std::function<Rational(std::size_t, const NumericalSemigroup&, const AperySet&)>& fn);
};

struct SidePair {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

/// Sum of edge differences vs. H(S_n) - H(S_0).
SidePair telescoping_sum(const VertexFunction& h, const CanonicalPath& path);

/// Product of edge ratios vs. H(S_n) / H(S_0). Throws UndefinedFraction if
/// H vanishes anywhere on the path.
SidePair telescoping_product(const VertexFunction& h, const CanonicalPath& path);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination over Q.
Rational determinant(RationalMatrix a);

/// Determinant of the matrix whose first row is `first_row` and whose
/// remaining p - 1 rows are `fixed_rows`, expanded along the first row.
Rational bordered_determinant(const std::vector<Rational>& first_row, const RationalMatrix& fixed_rows);

/// Sum over windows of p consecutive edges of D(edge differences) vs.
/// D(H(V_{n-p+j}) - H(V_{j-1}))_j. Requires 0 < p <= n and fixed_rows of
/// shape (p-1) x p; ArgumentError otherwise.
SidePair determinant_relation(const VertexFunction& h, const CanonicalPath& path, std::size_t p,
                              const RationalMatrix& fixed_rows);

}  // namespace apery
