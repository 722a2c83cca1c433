#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apery/poly.hpp"
#include "apery/q_bernoulli.hpp"
#include "apery/rational.hpp"
#include "apery/report.hpp"
#include "apery/semigroup.hpp"
#include "apery/tree_path.hpp"

namespace apery {

/// Test function f on {0, ..., n_max}.
class FunctionTable {
 public:
  explicit FunctionTable(std::vector<Rational> values);
  static FunctionTable from(std::int64_t n_max, const std::function<Rational(std::int64_t)>& fn);

  std::int64_t n_max() const noexcept { return static_cast<std::int64_t>(values_.size()) - 1; }
  bool injective() const noexcept { return injective_; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  /// Throws ArgumentError outside the domain.
  const Rational& operator()(std::int64_t x) const;

  /// f{points}, in the order given.
  std::vector<Rational> image(std::span<const std::int64_t> points) const;

  /// First pair of distinct points with equal values.
  std::optional<std::pair<std::int64_t, std::int64_t>> collision(std::span<const std::int64_t> points) const;

 private:
  std::vector<Rational> values_;
  bool injective_ = true;
};

/// Largest point any semigroup identity evaluates f at: max(F(S) + m, m - 1).
std::int64_t required_domain(const NumericalSemigroup& s, std::int64_t m);

/// Largest admissible subset count for explicit enumeration.
inline constexpr unsigned long kMaxSubsets = 100000;

/// A symmetric function F(x_1, ..., x_p) plugged into the general relation.
/// Scalar kinds evaluate to constant polynomials; product_z is a polynomial
/// in z; inverse_product_z is evaluated at the rational point `z`.
struct SymmetricSpec {
  enum class Kind { elementary, complete, product_z, inverse_product_z, divided_difference, power_sum, custom };

  Kind kind = Kind::elementary;
  std::size_t p = 1;
  int k = 1;
  Poly w;
  Rational z = 0;
  std::function<Rational(std::span<const Rational>)> custom;
  std::string custom_name = "custom";

  static SymmetricSpec of(Kind kind, std::size_t p, int k = 1) {
    SymmetricSpec s;
    s.kind = kind;
    s.p = p;
    s.k = k;
    return s;
  }
  static SymmetricSpec elementary(std::size_t p, int k) { return of(Kind::elementary, p, k); }
  static SymmetricSpec complete(std::size_t p, int k) { return of(Kind::complete, p, k); }
  static SymmetricSpec product_z(std::size_t p) { return of(Kind::product_z, p); }
  static SymmetricSpec inverse_product_z(std::size_t p, Rational z);
  static SymmetricSpec divided_difference(std::size_t p, Poly w);
  static SymmetricSpec power_sum(std::size_t p, int k) { return of(Kind::power_sum, p, k); }
  static SymmetricSpec from_function(std::size_t p, std::function<Rational(std::span<const Rational>)> fn,
                                     std::string name);

  Poly evaluate(std::span<const Rational> xs) const;
  std::string name() const;
};

/// Gassert-Shor: sum over gaps of f(c + m) - f(c) vs sum over residues of
/// f(a_i) - f(i), each side from scratch.
IdentityReport verify_gassert_shor(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f);

/// Same with a caller-supplied Apery set (not validated), so a corrupted set
/// can be fed in. On inequality the witness names a residue class whose
/// gap differences do not telescope to f(a_i) - f(i).
IdentityReport verify_gassert_shor(const NumericalSemigroup& s, const AperySet& ap, const FunctionTable& f);

/// The general relation for an arbitrary F: per-step sums over J in T_i
/// with |J| = p - 1 vs subset sums over S^(m) and I_m. Non-symmetric custom
/// F may legitimately report inequality.
IdentityReport verify_general(const CanonicalPath& path, const FunctionTable& f, const SymmetricSpec& spec);

/// Products prod (z + f(a)); polynomial identity, compared coefficient-wise.
IdentityReport verify_prop1(const CanonicalPath& path, const FunctionTable& f, std::size_t p);

/// Products of (z - f(a))^{-1}, evaluated at each sample. Throws
/// ArgumentError if a sample coincides with an f value in use.
IdentityReport verify_prop2(const CanonicalPath& path, const FunctionTable& f, std::size_t p,
                            std::span<const Rational> z_samples);

/// Degree bound for prop 2 once denominators are cleared: the number of
/// distinct f values over I_m, S^(m), C(S), C(S) + m, minus one. Agreement
/// at bound + 1 pole-free points certifies the rational identity.
std::size_t prop2_degree_bound(const CanonicalPath& path, const FunctionTable& f);

/// `count` distinct rationals avoiding every f value used by prop 2.
std::vector<Rational> prop2_samples(const CanonicalPath& path, const FunctionTable& f, std::size_t count);

/// Elementary version; 1 <= k <= p.
IdentityReport verify_prop3(const CanonicalPath& path, const FunctionTable& f, std::size_t p, int k);

/// Complete version; k >= 1.
IdentityReport verify_prop4(const CanonicalPath& path, const FunctionTable& f, std::size_t p, int k);

/// Divided differences of w. f must be injective on I_m, S^(m), C(S) and
/// C(S) + m; otherwise ArgumentError naming the colliding points.
IdentityReport verify_prop5(const CanonicalPath& path, const FunctionTable& f, std::size_t p, const Poly& w);

/// Several w at once; shares the node weights across polynomials.
std::vector<IdentityReport> verify_prop5(const CanonicalPath& path, const FunctionTable& f, std::size_t p,
                                         std::span<const Poly> ws);

/// Multiplicative specialization with power sums of degree k; k >= 1 and
/// 1 <= p < m. Component 0 is the general statement; for p == m - 1 the
/// printed T_i form is appended, and for p == 1, k == 1 the
/// prod (1 + m / c_i) form.
IdentityReport verify_prop6(const CanonicalPath& path, int k, std::size_t p);

/// Components: [sum over gaps of f(c+m) - f(c), telescoping lhs, telescoping
/// rhs] with H(S_i) = sum of f over the Apery set of S_i.
IdentityReport verify_telescoping_consistency(const CanonicalPath& path, const FunctionTable& f);

/// Apery invariants, gap-chain containment, window reconstruction, one-element
/// update along the path, and A / height-count conjugacy.
std::vector<IdentityReport> check_structure(const CanonicalPath& path);

/// Gassert-Shor with f(i) = (lambda q^{l(alpha-1)})^{floor((x+i)/m)} B^{(alpha)}_{n;q^l;y}(i/m):
/// n [l]_q sum over gaps of the order-(alpha-1) terms vs the Apery-set
/// boundary sum. Floating point; `residual` = |lhs - rhs|, `equal` when the
/// residual is below `tolerance`. Requires alpha >= 1 and n >= 1.
IdentityReport verify_qbernoulli_gs(const NumericalSemigroup& s, std::int64_t m, const QBernoulliParams& params,
                                    int n, double x, double tolerance = 1e-8);

/// Convenience overloads building the canonical path first.
IdentityReport verify_general(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f,
                              const SymmetricSpec& spec);
IdentityReport verify_prop1(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f, std::size_t p);
IdentityReport verify_prop3(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f, std::size_t p,
                            int k);
IdentityReport verify_prop4(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f, std::size_t p,
                            int k);
IdentityReport verify_prop5(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f, std::size_t p,
                            const Poly& w);
IdentityReport verify_prop6(const NumericalSemigroup& s, std::int64_t m, int k, std::size_t p);

}  // namespace apery
