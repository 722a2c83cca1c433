#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "apery/rational.hpp"

namespace apery {

using Json = nlohmann::ordered_json;

/// Outcome of one identity evaluation. Exact identities fill `lhs`/`rhs`
/// with num/den strings (one entry per component: polynomial coefficient,
/// sample point, ...). Floating identities also set `residual`.
struct IdentityReport {
  std::string identity;
  Json params = Json::object();
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  bool equal = false;
  std::optional<double> residual;
  std::optional<std::string> witness;
  /// Attached by the suite runner; absent for root-system identities.
  std::optional<std::vector<std::int64_t>> gaps;
  std::optional<std::int64_t> m;
};

/// Instance object in the report schema; lhs/rhs collapse to a bare string
/// when there is exactly one component.
Json to_json(const IdentityReport& r);

/// Fills lhs/rhs and `equal` from exact component vectors.
void set_exact_sides(IdentityReport& r, std::span<const Rational> lhs, std::span<const Rational> rhs);

std::string format_double(double x);

}  // namespace apery
