#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace apery {

/// Parameters of the generalized q-Bernoulli family. The series converges
/// for 0 < q < 1 and |lambda| q^l < 1; only integer orders alpha >= 0 are
/// supported.
struct QBernoulliParams {
  double q = 0.5;
  int l = 1;
  double y = 0.0;
  int alpha = 1;
  double lambda = 0.25;
  double truncation_tol = 1e-14;
  std::size_t max_terms = 100000;
  /// Accumulate in long double (still compensated) instead of double.
  bool extended = false;

  /// Throws ArgumentError when outside the supported domain.
  void validate() const;
  QBernoulliParams with_alpha(int a) const;
};

/// (q^x - 1) / (q - 1); the limit x at q == 1.
double q_number(double x, double q);

/// B^{(alpha)}_{k;q}(t; lambda) with q = params.q taken as the base (the
/// caller substitutes q^l when needed). Zero for k < alpha. Otherwise
///   (-1)^alpha k!/(k-alpha)! sum_n c_n lambda^n q^{n+t} [n+t]_q^{k-alpha},
/// c_0 = 1, c_n = c_{n-1} [alpha+n-1]_q / [n]_q, summed until three
/// consecutive terms fall below truncation_tol * |partial sum|.
/// Throws ConvergenceError after max_terms terms.
double base_eval(int k, double t, const QBernoulliParams& params);

/// B^{(alpha)}_{n;q^l;y}(t; lambda) via its defining binomial transform of
/// base values at t - 1 with base q^l.
double shifted_eval(int n, double t, const QBernoulliParams& params);

struct Eq9Result {
  double lhs = 0;  // lambda q^{l(alpha-1)} B(t+1) - B(t)
  double rhs = 0;  // n [l]_q B^{(alpha-1)}_{n-1}(t)
  double residual = 0;
};

/// Requires n >= 1 and alpha >= 1.
Eq9Result verify_eq9(int n, double t, const QBernoulliParams& params);

/// f(i) = (lambda q^{l(alpha-1)})^{floor((x+i)/m)} B^{(alpha)}_{n;q^l;y}(i/m; lambda).
class SemigroupQFunction {
 public:
  SemigroupQFunction(const QBernoulliParams& params, int n, std::int64_t m, double x);

  double operator()(std::int64_t i) const;
  /// (lambda q^{l(alpha-1)})^{floor((x+i)/m)} n [l]_q B^{(alpha-1)}_{n-1}(i/m),
  /// which equals f(i + m) - f(i). Requires alpha >= 1.
  double difference(std::int64_t i) const;

  /// lambda q^{l(alpha-1)}.
  double ratio() const noexcept { return ratio_; }

 private:
  double weight(std::int64_t i) const;

  QBernoulliParams params_;
  int n_;
  std::int64_t m_;
  double x_;
  double ratio_;
};

SemigroupQFunction build_f_semigroup(const QBernoulliParams& params, int n, std::int64_t m, double x);

}  // namespace apery
