#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apery {

/// Exact rational in canonical form (positive denominator, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den", always with an explicit denominator ("120/1").
std::string to_string(const Rational& r);

/// Accepts "a", "a/b" and leading '-'. Throws ArgumentError on junk or b == 0.
Rational parse_rational(std::string_view text);

std::vector<std::string> to_strings(std::span<const Rational> values);

/// num / den reduced; den != 0.
inline Rational make_rational(long num, long den) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

Integer binomial(unsigned long n, unsigned long k);

/// Integer power with r^0 == 1 (including 0^0).
Rational pow(const Rational& r, unsigned long e);

}  // namespace apery
