#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apery/rational.hpp"

namespace apery {

/// Univariate polynomial over Rational. coeffs()[k] multiplies z^k; trailing
/// zeros are stripped so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(unsigned degree, const Rational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Zero past the degree.
  Rational coeff(std::size_t k) const;

  Rational operator()(const Rational& z) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; throws ArgumentError on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  std::string to_string(char var = 'z') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Coefficient strings of both polynomials padded with zeros to equal length.
std::pair<std::vector<std::string>, std::vector<std::string>> padded_coeff_strings(
    const Poly& a, const Poly& b);

}  // namespace apery
