#include "apery/root_systems.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "apery/errors.hpp"
#include "apery/partition.hpp"

namespace apery {

namespace {

using Matrix = std::vector<std::vector<int>>;

/// Gram matrix of the simple roots, scaled to integers (Bourbaki numbering).
Matrix gram_matrix(RootType type, int n) {
  Matrix g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto link = [&](int i, int j, int v) {
    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  auto diag = [&](int i, int v) { g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = v; };
  switch (type) {
    case RootType::A:
      for (int i = 0; i < n; ++i) diag(i, 2);
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case RootType::B:  // a_n = e_n short; scaled by 2
      for (int i = 0; i < n; ++i) diag(i, 4);
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      diag(n - 1, 2);
      break;
    case RootType::C:  // a_n = 2 e_n long
      for (int i = 0; i < n; ++i) diag(i, 2);
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      diag(n - 1, 4);
      break;
    case RootType::D:  // a_n = e_{n-1} + e_n
      for (int i = 0; i < n; ++i) diag(i, 2);
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case RootType::E:
      for (int i = 0; i < n; ++i) diag(i, 2);
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case RootType::F:  // a_1, a_2 long; scaled by 2
      g = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case RootType::G:  // a_1 short
      g = {{2, -3}, {-3, 6}};
      break;
  }
  return g;
}

std::vector<int> exponent_table(RootType type, int n) {
  std::vector<int> e;
  switch (type) {
    case RootType::A:
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case RootType::B:
    case RootType::C:
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case RootType::D:
      for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case RootType::E:
      if (n == 6) e = {1, 4, 5, 7, 8, 11};
      if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case RootType::F:
      e = {1, 5, 7, 11};
      break;
    case RootType::G:
      e = {1, 5};
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

bool valid_rank(RootType type, int n) {
  if (n < 1 || n > 8) return false;
  switch (type) {
    case RootType::A: return true;
    case RootType::B:
    case RootType::C: return n >= 2;
    case RootType::D: return n >= 4;
    case RootType::E: return n >= 6;
    case RootType::F: return n == 4;
    case RootType::G: return n == 2;
  }
  return false;
}

char letter(RootType t) { return "ABCDEFG"[static_cast<int>(t)]; }

/// (q^a - 1) * p
Poly times_binomial(const Poly& p, unsigned a) {
  std::vector<Rational> c(p.coeffs().size() + a);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    c[i + a] += p.coeffs()[i];
    c[i] -= p.coeffs()[i];
  }
  return Poly(std::move(c));
}

Poly q_minus_one_power(unsigned a) {
  std::vector<Rational> c(a + 1);
  c[0] = -1;
  c[a] += 1;
  return Poly(std::move(c));
}

void require_domain(const FunctionTable& f, std::int64_t need, const char* who) {
  if (f.n_max() < need)
    throw ArgumentError(std::string(who) + ": f must be defined on [0, " + std::to_string(need) + "]");
}

}  // namespace

std::string RootSystem::label() const { return std::string(1, letter(type)) + std::to_string(rank); }

std::vector<std::int64_t> RootSystem::height_counts() const {
  const int top = heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
  std::vector<std::int64_t> b(static_cast<std::size_t>(top) + 1, 0);
  for (int h : heights) ++b[static_cast<std::size_t>(h)];
  return b;
}

RootSystem build_root_system(RootType type, int rank) {
  if (!valid_rank(type, rank))
    throw ArgumentError(std::string("no root system ") + letter(type) + std::to_string(rank) + " of rank <= 8");
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  const auto g = gram_matrix(type, rank);
  const auto n = static_cast<std::size_t>(rank);
  rs.cartan.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((2 * g[i][j]) % g[i][i] != 0) throw std::logic_error("non-integral Cartan entry");
      rs.cartan[i][j] = 2 * g[i][j] / g[i][i];
    }

  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    known.insert(r);
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    for (const auto& r : layer) rs.positive_roots.push_back(r);
    std::set<std::vector<int>> next;
    for (const auto& r : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        // alpha_i-string through r: r - p a_i .. r + q a_i with p - q = <r, a_i^v>
        int p = 0;
        auto down = r;
        while (true) {
          --down[i];
          if (down[i] < 0 || !known.contains(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += r[j] * rs.cartan[i][j];
        if (p - pairing > 0) {
          auto up = r;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
  }
  for (const auto& r : rs.positive_roots) {
    int h = 0;
    for (int c : r) h += c;
    rs.heights.push_back(h);
  }
  rs.exponents = exponent_table(type, rank);
  return rs;
}

RootSystem build_root_system(const std::string& label, int rank) {
  if (label.empty()) throw ArgumentError("empty root system label");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (c < 'A' || c > 'G') throw ArgumentError("unknown root system type '" + label + "'");
  const auto type = static_cast<RootType>(c - 'A');
  int r = rank;
  if (label.size() > 1) {
    try {
      std::size_t used = 0;
      r = std::stoi(label.substr(1), &used);
      if (used != label.size() - 1) throw ArgumentError("bad rank");
    } catch (const std::exception&) {
      throw ArgumentError("bad root system label '" + label + "'");
    }
    if (rank != 0 && rank != r) throw ArgumentError("label " + label + " conflicts with rank " + std::to_string(rank));
  }
  return build_root_system(type, r);
}

std::vector<RootSystem> all_root_systems() {
  std::vector<RootSystem> out;
  for (int t = 0; t < 7; ++t)
    for (int n = 1; n <= 8; ++n)
      if (valid_rank(static_cast<RootType>(t), n)) out.push_back(build_root_system(static_cast<RootType>(t), n));
  return out;
}

std::string root_system_invariant_failure(const RootSystem& rs) {
  int sum_e = 0;
  for (int e : rs.exponents) sum_e += e;
  if (static_cast<int>(rs.positive_roots.size()) != sum_e)
    return rs.label() + ": |R+| = " + std::to_string(rs.positive_roots.size()) + " but sum of exponents = " +
           std::to_string(sum_e);
  const auto b = rs.height_counts();
  if (b.size() < 2 || b[1] != rs.rank) return rs.label() + ": b_1 != rank";
  if (static_cast<int>(b.size()) - 1 != rs.exponents.back()) return rs.label() + ": max height != max exponent";
  std::vector<std::int64_t> e(rs.exponents.begin(), rs.exponents.end());
  std::vector<std::int64_t> counts(b.begin() + 1, b.end());
  if (conjugate(e) != counts) return rs.label() + ": height counts are not conjugate to the exponents";
  return {};
}

Poly solomon_polynomial(const RootSystem& rs) {
  Poly out = Poly::constant(1);
  const Poly q_minus_1{Rational(-1), Rational(1)};
  for (int e : rs.exponents) {
    auto [quot, rem] = q_minus_one_power(static_cast<unsigned>(e + 1)).divmod(q_minus_1);
    if (!rem.is_zero()) throw std::logic_error("q - 1 does not divide q^d - 1");
    out *= quot;
  }
  return out;
}

Poly macdonald_polynomial(const RootSystem& rs) {
  Poly num = Poly::constant(1);
  Poly den = Poly::constant(1);
  for (int h : rs.heights) {
    num = times_binomial(num, static_cast<unsigned>(h + 1));
    den = times_binomial(den, static_cast<unsigned>(h));
  }
  auto [quot, rem] = num.divmod(den);
  if (!rem.is_zero()) throw std::logic_error(rs.label() + ": Macdonald product is not a polynomial");
  return quot;
}

IdentityReport verify_poincare_products(const RootSystem& rs) {
  const Poly sol = solomon_polynomial(rs);
  const Poly mac = macdonald_polynomial(rs);
  IdentityReport r;
  r.identity = "poincare-products";
  r.params = {{"root_system", rs.label()}, {"components", "coefficients of q^0, q^1, ..."}};
  auto [a, b] = padded_coeff_strings(sol, mac);
  r.lhs = std::move(a);
  r.rhs = std::move(b);
  r.equal = sol == mac;
  // cleared denominators, independently of the division above
  Poly den = Poly::constant(1), num = Poly::constant(1);
  for (int h : rs.heights) {
    num = times_binomial(num, static_cast<unsigned>(h + 1));
    den = times_binomial(den, static_cast<unsigned>(h));
  }
  if (!(sol * den == num)) {
    r.equal = false;
    r.witness = "Solomon * prod (q^h - 1) != prod (q^{h+1} - 1)";
  }
  if (!r.equal && !r.witness) r.witness = "Solomon and Macdonald polynomials differ";
  return r;
}

IdentityReport verify_eq10(const RootSystem& rs, const FunctionTable& f) {
  const int top = rs.exponents.back() + 1;
  require_domain(f, top, "verify_eq10");
  Rational lhs = 0, rhs = 0;
  for (int h : rs.heights) lhs += f(h + 1) - f(h);
  for (int e : rs.exponents) rhs += f(e + 1) - f(1);
  std::vector<Rational> l{lhs}, r_{rhs};
  bool nonzero = true;
  for (int x = 1; x <= top; ++x) nonzero = nonzero && f(x) != 0;
  if (nonzero) {
    Rational pl = 1, pr = 1;
    for (int h : rs.heights) pl *= f(h + 1) / f(h);
    for (int e : rs.exponents) pr *= f(e + 1) / f(1);
    l.push_back(pl);
    r_.push_back(pr);
  }
  IdentityReport r;
  r.identity = "eq10";
  r.params = {{"root_system", rs.label()}, {"multiplicative", nonzero}};
  set_exact_sides(r, l, r_);
  if (!r.equal) r.witness = lhs != rhs ? "additive form differs" : "multiplicative form differs";
  return r;
}

IdentityReport verify_eq10_multiplicative(const RootSystem& rs, const FunctionTable& f) {
  const int top = rs.exponents.back() + 1;
  require_domain(f, top, "verify_eq10_multiplicative");
  for (int x = 1; x <= top; ++x)
    if (f(x) == 0) throw UndefinedFraction("verify_eq10_multiplicative: f(" + std::to_string(x) + ") = 0");
  Rational pl = 1, pr = 1;
  for (int h : rs.heights) pl *= f(h + 1) / f(h);
  for (int e : rs.exponents) pr *= f(e + 1) / f(1);
  IdentityReport r;
  r.identity = "eq10-multiplicative";
  r.params = {{"root_system", rs.label()}};
  set_exact_sides(r, std::span(&pl, 1), std::span(&pr, 1));
  return r;
}

IdentityReport verify_layer_counting(const RootSystem& rs, const FunctionTable& g) {
  require_domain(g, rs.exponents.back(), "verify_layer_counting");
  Rational lhs = 0, rhs = 0;
  for (int h : rs.heights) lhs += g(h);
  for (int e : rs.exponents)
    for (int h = 1; h <= e; ++h) rhs += g(h);
  IdentityReport r;
  r.identity = "layer-counting";
  r.params = {{"root_system", rs.label()}};
  set_exact_sides(r, std::span(&lhs, 1), std::span(&rhs, 1));
  return r;
}

IdentityReport verify_mk_identity(int k, const FunctionTable& f) {
  if (k < 1) throw ArgumentError("verify_mk_identity: k must be positive");
  require_domain(f, 2 * k, "verify_mk_identity");
  Rational lhs = 0, rhs = 0;
  for (int i = 1; i <= 2 * k; ++i) lhs += f(i) * ((2 * k) / i) - 2 * f(i) * (k / i);
  std::vector<int> members;
  const Rational half = make_rational(1, 2);
  for (int i = 1; i <= 2 * k; ++i) {
    const Rational x = make_rational(k, i);
    const Rational frac = x - Rational(x.get_num() / x.get_den());
    if (frac >= half) {
      members.push_back(i);
      rhs += f(i);
    }
  }
  IdentityReport r;
  r.identity = "mk-floor";
  r.params = {{"k", k}, {"M(k)", members}};
  set_exact_sides(r, std::span(&lhs, 1), std::span(&rhs, 1));
  return r;
}

IdentityReport verify_divisor_identity(int k, const FunctionTable& f) {
  if (k < 1) throw ArgumentError("verify_divisor_identity: k must be positive");
  require_domain(f, k, "verify_divisor_identity");
  Rational lhs = 0, rhs = 0;
  for (int i = 1; i <= k; ++i) lhs += f(i) * (k / i) - f(i) * ((k - 1) / i);
  std::vector<int> divisors;
  for (int i = 1; i <= k; ++i)
    if (k % i == 0) {
      divisors.push_back(i);
      rhs += f(i);
    }
  IdentityReport r;
  r.identity = "divisor-floor";
  r.params = {{"k", k}, {"divisors", divisors}};
  set_exact_sides(r, std::span(&lhs, 1), std::span(&rhs, 1));
  return r;
}

IdentityReport verify_eq10_qbernoulli(const RootSystem& rs, const QBernoulliParams& params, int n,
                                      double tolerance) {
  if (params.alpha < 1) throw ArgumentError("verify_eq10_qbernoulli: alpha must be >= 1");
  if (n < 1) throw ArgumentError("verify_eq10_qbernoulli: n must be >= 1");
  const double ratio = params.lambda * std::pow(params.q, params.l * (params.alpha - 1));
  const auto lower = params.with_alpha(params.alpha - 1);
  double sum = 0;
  for (int h : rs.heights) sum += std::pow(ratio, h) * shifted_eval(n - 1, h, lower);
  const double lhs = n * q_number(params.l, params.q) * sum;
  const double at_one = ratio * shifted_eval(n, 1.0, params);
  double rhs = 0;
  for (int e : rs.exponents) {
    const int d = e + 1;
    rhs += std::pow(ratio, d) * shifted_eval(n, d, params) - at_one;
  }
  IdentityReport r;
  r.identity = "eq10-qbernoulli";
  r.params = {{"root_system", rs.label()}, {"q", params.q},  {"l", params.l}, {"y", params.y},
              {"lambda", params.lambda},   {"alpha", params.alpha}, {"n", n}};
  r.lhs = {format_double(lhs)};
  r.rhs = {format_double(rhs)};
  r.residual = std::abs(lhs - rhs);
  r.equal = *r.residual < tolerance;
  if (!r.equal) r.witness = "residual " + format_double(*r.residual) + " exceeds " + format_double(tolerance);
  return r;
}

}  // namespace apery
