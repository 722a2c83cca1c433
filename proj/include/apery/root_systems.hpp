#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apery/identities.hpp"
#include "apery/poly.hpp"
#include "apery/q_bernoulli.hpp"
#include "apery/report.hpp"

namespace apery {

enum class RootType { A, B, C, D, E, F, G };

/// A finite crystallographic root system of rank <= 8. Positive roots are
/// generated from the Cartan matrix; exponents come from a static table, so
/// the height/exponent conjugacy is a real cross-check.
struct RootSystem {
  RootType type = RootType::A;
  int rank = 1;
  /// cartan[i][j] = 2 (a_i, a_j) / (a_i, a_i).
  std::vector<std::vector<int>> cartan;
  /// Coordinates in the simple-root basis, ordered by height then lexicographically.
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> heights;
  std::vector<int> exponents;

  std::string label() const;
  /// b[i] = number of positive roots of height i; b[0] unused (0).
  std::vector<std::int64_t> height_counts() const;
};

/// Valid pairs: A_n (n >= 1), B_n (n >= 2), C_n (n >= 2), D_n (n >= 4),
/// E_6/7/8, F_4, G_2; rank <= 8. ArgumentError otherwise.
RootSystem build_root_system(RootType type, int rank);

/// Parses "A3", "E8", "G2", or a bare letter combined with `rank`.
RootSystem build_root_system(const std::string& label, int rank = 0);

/// Every valid (type, rank) with rank <= 8.
std::vector<RootSystem> all_root_systems();

/// Checks |R+| = sum of exponents, b_1 = rank, max height = max exponent and
/// b_i = #{j : e_j >= i}. Empty string when all hold.
std::string root_system_invariant_failure(const RootSystem& rs);

/// Solomon prod (q^{e+1} - 1)/(q - 1) vs Macdonald prod over roots of
/// (q^{h+1} - 1)/(q^h - 1), both as exact polynomials in q.
IdentityReport verify_poincare_products(const RootSystem& rs);

Poly solomon_polynomial(const RootSystem& rs);
/// Throws std::logic_error if the root product is not a polynomial.
Poly macdonald_polynomial(const RootSystem& rs);

/// Additive form over heights vs exponents; when f is nonzero on
/// 1 .. max exponent + 1 the multiplicative form is appended as a second
/// component. Requires f defined up to max exponent + 1.
IdentityReport verify_eq10(const RootSystem& rs, const FunctionTable& f);

/// Multiplicative form only; UndefinedFraction if f vanishes at a point used.
IdentityReport verify_eq10_multiplicative(const RootSystem& rs, const FunctionTable& f);

/// sum over roots of g(ht(r)) vs sum_i sum_{h=1}^{e_i} g(h).
IdentityReport verify_layer_counting(const RootSystem& rs, const FunctionTable& g);

/// sum_{i<=2k} f(i)([2k/i] - 2[k/i]) vs sum over M(k) = {i : frac(k/i) >= 1/2}.
IdentityReport verify_mk_identity(int k, const FunctionTable& f);

/// sum_{i<=k} f(i)([k/i] - [(k-1)/i]) vs sum over divisors of k.
IdentityReport verify_divisor_identity(int k, const FunctionTable& f);

/// The q-Bernoulli specialization f(i) = (lambda q^{l(alpha-1)})^i B^{(alpha)}_{n;q^l;y}(i).
IdentityReport verify_eq10_qbernoulli(const RootSystem& rs, const QBernoulliParams& params, int n,
                                      double tolerance = 1e-8);

}  // namespace apery
