#include "apery/q_bernoulli.hpp"

#include <cmath>
#include <string>

#include "apery/errors.hpp"

namespace apery {

void QBernoulliParams::validate() const {
  if (!(q > 0.0 && q < 1.0)) throw ArgumentError("q-Bernoulli: q must lie in (0, 1)");
  if (l < 1) throw ArgumentError("q-Bernoulli: l must be a positive integer");
  if (alpha < 0) throw ArgumentError("q-Bernoulli: alpha must be a nonnegative integer");
  if (!(std::abs(lambda) * std::pow(q, l) < 1.0))
    throw ArgumentError("q-Bernoulli: |lambda| q^l must be < 1");
  if (!(truncation_tol > 0.0)) throw ArgumentError("q-Bernoulli: truncation_tol must be positive");
  if (max_terms == 0) throw ArgumentError("q-Bernoulli: max_terms must be positive");
}

QBernoulliParams QBernoulliParams::with_alpha(int a) const {
  auto p = *this;
  p.alpha = a;
  return p;
}

double q_number(double x, double q) {
  if (q == 1.0) return x;
  return (std::pow(q, x) - 1.0) / (q - 1.0);
}

namespace {

template <class F>
struct Neumaier {
  F sum = 0;
  F comp = 0;
  void add(F x) {
    F t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  F value() const { return sum + comp; }
};

template <class F>
F q_num(F x, F q) {
  return (std::pow(q, x) - F(1)) / (q - F(1));
}

template <class F>
F int_pow(F base, int e) {
  F r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

template <class F>
double base_series(int k, double t_in, const QBernoulliParams& params) {
  const F q = params.q;
  const F lambda = params.lambda;
  const F t = t_in;
  const int power = k - params.alpha;
  const F tol = params.truncation_tol;
  const F qt = std::pow(q, t);

  Neumaier<F> acc;
  F c = 1;
  F lq = 1;  // (lambda q)^n
  int small = 0;
  bool converged = false;
  F term = 0;
  for (std::size_t n = 0; n < params.max_terms; ++n) {
    if (n > 0) {
      c *= q_num<F>(F(params.alpha) + F(n) - 1, q) / q_num<F>(F(n), q);
      lq *= lambda * q;
    }
    if (c == 0) {
      // alpha == 0: [0]_q kills every coefficient past n = 0
      converged = true;
      break;
    }
    term = c * lq * qt * int_pow(q_num<F>(F(n) + t, q), power);
    acc.add(term);
    small = std::abs(term) <= tol * std::abs(acc.value()) ? small + 1 : 0;
    if (small >= 3) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw ConvergenceError("q-Bernoulli series did not converge within " + std::to_string(params.max_terms) +
                               " terms",
                           static_cast<double>(std::abs(term)));

  F prefactor = (params.alpha % 2 == 0) ? F(1) : F(-1);
  for (int j = k - params.alpha + 1; j <= k; ++j) prefactor *= F(j);
  return static_cast<double>(prefactor * acc.value());
}

}  // namespace

double base_eval(int k, double t, const QBernoulliParams& params) {
  params.validate();
  if (k < 0) throw ArgumentError("base_eval: k must be nonnegative");
  if (k < params.alpha) return 0.0;
  return params.extended ? base_series<long double>(k, t, params) : base_series<double>(k, t, params);
}

double shifted_eval(int n, double t, const QBernoulliParams& params) {
  params.validate();
  if (n < 0) throw ArgumentError("shifted_eval: n must be nonnegative");
  QBernoulliParams base = params;
  base.q = std::pow(params.q, params.l);
  base.l = 1;
  const double ql = q_number(params.l, params.q);
  double sum = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k;
    if (k < params.alpha) continue;
    const double scale = std::pow(params.q, params.l * (k - params.alpha + 1) * params.y);
    sum += binom * scale * std::pow(ql, k) * base_eval(k, t - 1.0, base);
  }
  return sum;
}

Eq9Result verify_eq9(int n, double t, const QBernoulliParams& params) {
  if (n < 1) throw ArgumentError("verify_eq9: n must be >= 1");
  if (params.alpha < 1) throw ArgumentError("verify_eq9: alpha must be >= 1");
  Eq9Result r;
  const double ratio = params.lambda * std::pow(params.q, params.l * (params.alpha - 1));
  r.lhs = ratio * shifted_eval(n, t + 1.0, params) - shifted_eval(n, t, params);
  r.rhs = n * q_number(params.l, params.q) * shifted_eval(n - 1, t, params.with_alpha(params.alpha - 1));
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

SemigroupQFunction::SemigroupQFunction(const QBernoulliParams& params, int n, std::int64_t m, double x)
    : params_(params), n_(n), m_(m), x_(x) {
  params.validate();
  if (m < 1) throw ArgumentError("build_f_semigroup: m must be >= 1");
  if (n < 0) throw ArgumentError("build_f_semigroup: n must be nonnegative");
  ratio_ = params.lambda * std::pow(params.q, params.l * (params.alpha - 1));
}

double SemigroupQFunction::weight(std::int64_t i) const {
  const auto e = static_cast<int>(std::floor((x_ + static_cast<double>(i)) / static_cast<double>(m_)));
  return std::pow(ratio_, e);
}

double SemigroupQFunction::operator()(std::int64_t i) const {
  return weight(i) * shifted_eval(n_, static_cast<double>(i) / static_cast<double>(m_), params_);
}

double SemigroupQFunction::difference(std::int64_t i) const {
  if (params_.alpha < 1) throw ArgumentError("SemigroupQFunction::difference: alpha must be >= 1");
  if (n_ < 1) throw ArgumentError("SemigroupQFunction::difference: n must be >= 1");
  return weight(i) * n_ * q_number(params_.l, params_.q) *
         shifted_eval(n_ - 1, static_cast<double>(i) / static_cast<double>(m_), params_.with_alpha(params_.alpha - 1));
}

SemigroupQFunction build_f_semigroup(const QBernoulliParams& params, int n, std::int64_t m, double x) {
  return {params, n, m, x};
}

}  // namespace apery
