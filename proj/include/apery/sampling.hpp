#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "apery/identities.hpp"
#include "apery/semigroup.hpp"

namespace apery {

using Rng = std::mt19937_64;

/// 2-4 generators uniform on [2, 20]; redraws until gcd == 1 and F <= max_frobenius.
NumericalSemigroup random_semigroup(Rng& rng, std::int64_t max_frobenius = 60);

/// Uniform nonzero member of s in [1, max_m]; 0 if there is none.
std::int64_t random_member(Rng& rng, const NumericalSemigroup& s, std::int64_t max_m = 12);

/// Pairwise distinct rationals num/den with |num| <= 10^6, 1 <= den <= 100
/// on {0, ..., n_max}; injectivity by rejection.
FunctionTable random_injective_function(Rng& rng, std::int64_t n_max);

/// Rationals with small numerators (|num| <= 20, den <= 5); repeats allowed.
std::vector<Rational> random_rationals(Rng& rng, std::size_t count);

/// Random rational in the same range as random_injective_function.
Rational random_rational(Rng& rng);

}  // namespace apery
