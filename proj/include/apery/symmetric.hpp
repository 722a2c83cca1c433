#pragma once

#include <span>
#include <vector>

#include "apery/poly.hpp"
#include "apery/rational.hpp"

namespace apery {

/// e_k(xs); e_0 = 1, zero for k < 0 or k > |xs|.
Rational elementary(int k, std::span<const Rational> xs);

/// e_0 .. e_{|xs|} in one pass.
std::vector<Rational> elementary_all(std::span<const Rational> xs);

/// h_k(xs); h_0 = 1, zero for k < 0.
Rational complete(int k, std::span<const Rational> xs);

/// prod (z + sign * x_i); sign must be +1 or -1.
Poly product_poly(std::span<const Rational> xs, int sign = 1);

/// Newton divided difference of w on pairwise distinct nodes, in Lagrange
/// form: sum_j w(x_j) / prod_{k != j} (x_j - x_k). Throws ArgumentError for
/// an empty node list or repeated nodes (confluent nodes unsupported).
Rational divided_difference(const Poly& w, std::span<const Rational> nodes);

/// Lagrange weights 1 / prod_{k != j}(x_j - x_k), so that the divided
/// difference of w is sum_j weights[j] * w(x_j). Same errors as above.
std::vector<Rational> lagrange_weights(std::span<const Rational> nodes);

/// Two sides of a one-variable-swap recurrence.
struct RecurrenceSides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

enum class RecurrenceForm {
  /// e_k(x_2..x_p) - e_k(x_1..x_{p-1}) = (x_p - x_1) e_{k-1}(x_2..x_{p-1})
  corrected,
  /// the same with e_k instead of e_{k-1} on the right; false in general
  as_printed,
};

/// Requires |xs| >= 2 (ArgumentError otherwise).
RecurrenceSides e_recurrence(std::span<const Rational> xs, int k,
                             RecurrenceForm form = RecurrenceForm::corrected);
bool e_recurrence_check(std::span<const Rational> xs, int k);

/// h_k(x_2..x_p) - h_k(x_1..x_{p-1}) = (x_p - x_1) h_{k-1}(x_1..x_p).
RecurrenceSides h_recurrence(std::span<const Rational> xs, int k);
bool h_recurrence_check(std::span<const Rational> xs, int k);

/// Coefficients of z^0, z^{-1}, ..., z^{-order} in the expansion of
/// z^p prod (z - x_i)^{-1} as a power series in 1/z, computed by truncated
/// series multiplication. These equal h_0 .. h_order.
std::vector<Rational> inverse_product_series(std::span<const Rational> xs, unsigned order = 8);

}  // namespace apery
