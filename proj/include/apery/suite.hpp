#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apery/q_bernoulli.hpp"
#include "apery/report.hpp"
#include "apery/semigroup.hpp"

namespace apery {

/// What `verify` runs. With `semigroup` unset, every instance draws a fresh
/// random (S, m); f is always drawn from the seeded generator.
struct SuiteConfig {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t instances = 20;
  std::optional<NumericalSemigroup> semigroup;
  std::optional<std::int64_t> m;
  std::optional<std::size_t> p;
  std::optional<int> k;
  /// f(x) = x mod 2 instead of a random injective table.
  bool non_injective_f = false;
  /// Cap on binomial(m, p) for the "all admissible p" sweeps.
  unsigned long max_subsets = 10000;
  QBernoulliParams q_params;
  int q_order = 2;
  double q_shift = 0.0;
  double q_tolerance = 1e-8;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<IdentityReport> reports;
  bool pass() const;
  Json to_json() const;
  std::string to_text() const;
};

/// Names accepted by SuiteConfig::suite.
const std::vector<std::string>& suite_names();

/// Throws ArgumentError for unknown suites or invalid parameters.
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace apery
