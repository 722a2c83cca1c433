#include "apery/sampling.hpp"

#include <set>

namespace apery {

NumericalSemigroup random_semigroup(Rng& rng, std::int64_t max_frobenius) {
  std::uniform_int_distribution<int> count(2, 4);
  std::uniform_int_distribution<std::int64_t> gen(2, 20);
  while (true) {
    std::vector<std::int64_t> gens(static_cast<std::size_t>(count(rng)));
    for (auto& g : gens) g = gen(rng);
    if (gcd_of(gens) != 1) continue;
    auto s = NumericalSemigroup::from_generators(gens);
    if (s.frobenius() <= max_frobenius) return s;
  }
}

std::int64_t random_member(Rng& rng, const NumericalSemigroup& s, std::int64_t max_m) {
  std::vector<std::int64_t> candidates;
  for (std::int64_t x = 1; x <= max_m; ++x)
    if (s.contains(x)) candidates.push_back(x);
  if (candidates.empty()) return 0;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng)];
}

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 100);
  const long a = num(rng);
  return make_rational(a, den(rng));
}

FunctionTable random_injective_function(Rng& rng, std::int64_t n_max) {
  std::set<Rational> used;
  std::vector<Rational> values;
  while (static_cast<std::int64_t>(values.size()) <= n_max) {
    Rational r = random_rational(rng);
    if (used.insert(r).second) values.push_back(std::move(r));
  }
  return FunctionTable(std::move(values));
}

std::vector<Rational> random_rationals(Rng& rng, std::size_t count) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) {
    const long a = num(rng);
    out.push_back(make_rational(a, den(rng)));
  }
  return out;
}

}  // namespace apery
