#include "apery/identities.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "apery/combinations.hpp"
#include "apery/errors.hpp"
#include "apery/partition.hpp"
#include "apery/symmetric.hpp"

namespace apery {

// ---------------------------------------------------------------------------
// FunctionTable

FunctionTable::FunctionTable(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw ArgumentError("FunctionTable: empty domain");
  std::vector<Rational> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  injective_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

FunctionTable FunctionTable::from(std::int64_t n_max, const std::function<Rational(std::int64_t)>& fn) {
  if (n_max < 0) throw ArgumentError("FunctionTable: negative n_max");
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t x = 0; x <= n_max; ++x) v.push_back(fn(x));
  return FunctionTable(std::move(v));
}

const Rational& FunctionTable::operator()(std::int64_t x) const {
  if (x < 0 || x > n_max())
    throw ArgumentError("f evaluated at " + std::to_string(x) + " outside its domain [0, " +
                        std::to_string(n_max()) + "]");
  return values_[static_cast<std::size_t>(x)];
}

std::vector<Rational> FunctionTable::image(std::span<const std::int64_t> points) const {
  std::vector<Rational> out;
  out.reserve(points.size());
  for (auto x : points) out.push_back((*this)(x));
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> FunctionTable::collision(
    std::span<const std::int64_t> points) const {
  std::map<Rational, std::int64_t> seen;
  for (auto x : points) {
    auto [it, inserted] = seen.emplace((*this)(x), x);
    if (!inserted && it->second != x) return std::pair{it->second, x};
  }
  return std::nullopt;
}

std::int64_t required_domain(const NumericalSemigroup& s, std::int64_t m) {
  return std::max(s.frobenius() + m, m - 1);
}

// ---------------------------------------------------------------------------
// SymmetricSpec

SymmetricSpec SymmetricSpec::inverse_product_z(std::size_t p, Rational z) {
  auto s = of(Kind::inverse_product_z, p);
  s.z = std::move(z);
  return s;
}

SymmetricSpec SymmetricSpec::divided_difference(std::size_t p, Poly w) {
  auto s = of(Kind::divided_difference, p);
  s.w = std::move(w);
  return s;
}

SymmetricSpec SymmetricSpec::from_function(std::size_t p, std::function<Rational(std::span<const Rational>)> fn,
                                           std::string name) {
  auto s = of(Kind::custom, p);
  s.custom = std::move(fn);
  s.custom_name = std::move(name);
  return s;
}

Poly SymmetricSpec::evaluate(std::span<const Rational> xs) const {
  switch (kind) {
    case Kind::elementary:
      return Poly::constant(apery::elementary(k, xs));
    case Kind::complete:
      return Poly::constant(apery::complete(k, xs));
    case Kind::product_z:
      return product_poly(xs, +1);
    case Kind::inverse_product_z: {
      Rational prod = 1;
      for (const auto& x : xs) {
        if (z == x) throw ArgumentError("inverse_product_z: pole at z = " + to_string(z));
        prod /= z - x;
      }
      return Poly::constant(prod);
    }
    case Kind::divided_difference:
      return Poly::constant(apery::divided_difference(w, xs));
    case Kind::power_sum: {
      Rational s = 0;
      for (const auto& x : xs) s += pow(x, static_cast<unsigned long>(k));
      return Poly::constant(s);
    }
    case Kind::custom:
      if (!custom) throw ArgumentError("custom symmetric function not set");
      return Poly::constant(custom(xs));
  }
  throw std::logic_error("unknown SymmetricSpec kind");
}

std::string SymmetricSpec::name() const {
  switch (kind) {
    case Kind::elementary: return "e_" + std::to_string(k);
    case Kind::complete: return "h_" + std::to_string(k);
    case Kind::product_z: return "prod(z+x)";
    case Kind::inverse_product_z: return "prod(z-x)^-1";
    case Kind::divided_difference: return "divided_difference(" + w.to_string() + ")";
    case Kind::power_sum: return "p_" + std::to_string(k);
    case Kind::custom: return custom_name;
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Shared machinery

namespace {

/// Component-wise vector value, for identities checked at several points.
struct Components {
  std::vector<Rational> v;

  Components& operator+=(const Components& o) {
    if (v.empty()) v.resize(o.v.size());
    for (std::size_t i = 0; i < o.v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  friend Components operator-(Components a, const Components& b) {
    if (a.v.empty()) a.v.resize(b.v.size());
    for (std::size_t i = 0; i < b.v.size(); ++i) a.v[i] -= b.v[i];
    return a;
  }
  friend bool operator==(const Components& a, const Components& b) {
    const auto n = std::max(a.v.size(), b.v.size());
    for (std::size_t i = 0; i < n; ++i) {
      Rational x = i < a.v.size() ? a.v[i] : Rational(0);
      Rational y = i < b.v.size() ? b.v[i] : Rational(0);
      if (x != y) return false;
    }
    return true;
  }
};

void check_subset_count(std::size_t pool, std::size_t size) {
  if (size > pool) return;
  if (binomial(pool, size) > kMaxSubsets)
    throw ArgumentError("subset enumeration too large: binomial(" + std::to_string(pool) + ", " +
                        std::to_string(size) + ") > " + std::to_string(kMaxSubsets));
}

/// Sum of fn(values of I, then tail) over every |I| = size subset of pool.
template <class V, class Fn>
V subset_sum(std::span<const Rational> pool, std::size_t size, std::span<const Rational> tail, Fn&& fn) {
  check_subset_count(pool.size(), size);
  V acc{};
  std::vector<Rational> buf(size + tail.size());
  std::copy(tail.begin(), tail.end(), buf.begin() + static_cast<std::ptrdiff_t>(size));
  for_each_combination(pool.size(), size, [&](std::span<const std::size_t> idx) {
    for (std::size_t j = 0; j < size; ++j) buf[j] = pool[idx[j]];
    acc += fn(std::span<const Rational>(buf));
  });
  return acc;
}

/// Values over a common denominator: value_j = X_j / L. The enumerating
/// verifiers below work on X in integer arithmetic and divide once at the end.
struct Scaled {
  Integer L = 1;
  std::vector<Integer> X;
};

Scaled scale(std::span<const Rational> values) {
  Scaled s;
  for (const auto& v : values) mpz_lcm(s.L.get_mpz_t(), s.L.get_mpz_t(), v.get_den_mpz_t());
  s.X.reserve(values.size());
  for (const auto& v : values) s.X.push_back(v.get_num() * (s.L / v.get_den()));
  return s;
}

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// L^e for any integer e.
Rational lpow(const Integer& L, long e) {
  return e >= 0 ? Rational(ipow(L, static_cast<unsigned long>(e))) : ratio(1, ipow(L, static_cast<unsigned long>(-e)));
}

std::vector<std::int64_t> residues(std::int64_t m) {
  std::vector<std::int64_t> r(static_cast<std::size_t>(m));
  std::iota(r.begin(), r.end(), std::int64_t{0});
  return r;
}

void check_domain(const CanonicalPath& path, const FunctionTable& f) {
  const auto need = required_domain(path.base(), path.m());
  if (f.n_max() < need)
    throw ArgumentError("f is defined on [0, " + std::to_string(f.n_max()) + "] but the identity needs [0, " +
                        std::to_string(need) + "]");
}

void check_p(const CanonicalPath& path, std::size_t p) {
  if (p == 0 || p > static_cast<std::size_t>(path.m()))
    throw ArgumentError("p must satisfy 0 < p <= m = " + std::to_string(path.m()) + ", got " + std::to_string(p));
  check_subset_count(static_cast<std::size_t>(path.m()), p);
}

/// Points where semigroup identities evaluate f: I_m, S^(m), C(S), C(S)+m.
std::vector<std::int64_t> evaluation_points(const CanonicalPath& path) {
  std::set<std::int64_t> pts;
  const auto m = path.m();
  for (std::int64_t i = 0; i < m; ++i) pts.insert(i);
  for (auto a : path.apery(path.length()).values) pts.insert(a);
  for (auto c : path.base().gaps()) {
    pts.insert(c);
    pts.insert(c + m);
  }
  return {pts.begin(), pts.end()};
}

template <class V>
struct RelationSides {
  std::vector<V> steps;  // steps[i - 1] is the contribution of edge i
  V lhs{};
  V rhs{};
  std::optional<std::string> witness;
};

/// Evaluates a relation of the form
///   sum_i step(i) = vertex(S^(m)) - vertex(I_m)
/// with both sides from their own definitions. On inequality, locates the
/// first edge whose term differs from vertex(S_i^(m)) - vertex(S_{i-1}^(m)).
template <class V, class StepFn, class VertexFn>
RelationSides<V> evaluate_relation(const CanonicalPath& path, StepFn&& step, VertexFn&& vertex) {
  RelationSides<V> out;
  const auto n = path.length();
  for (std::size_t i = 1; i <= n; ++i) {
    out.steps.push_back(step(i));
    out.lhs += out.steps.back();
  }
  const auto top = path.apery(n).sorted_values();
  const auto bottom = residues(path.m());
  out.rhs = vertex(std::span<const std::int64_t>(top)) - vertex(std::span<const std::int64_t>(bottom));
  if (!(out.lhs == out.rhs)) {
    for (std::size_t i = 1; i <= n && !out.witness; ++i) {
      const auto cur = path.apery(i).sorted_values();
      const auto prev = path.apery(i - 1).sorted_values();
      V edge = vertex(std::span<const std::int64_t>(cur)) - vertex(std::span<const std::int64_t>(prev));
      if (!(edge == out.steps[i - 1]))
        out.witness = "step " + std::to_string(i) + " (c_i = " + std::to_string(path.step(i).frobenius_added) +
                      "): term differs from H(S_i) - H(S_{i-1})";
    }
    if (!out.witness) out.witness = "sides differ but every step matches its edge difference";
  }
  return out;
}

void fill_sides(IdentityReport& r, const RelationSides<Rational>& s) {
  set_exact_sides(r, std::span(&s.lhs, 1), std::span(&s.rhs, 1));
  r.witness = s.witness;
}

void fill_sides(IdentityReport& r, const RelationSides<Poly>& s) {
  auto [a, b] = padded_coeff_strings(s.lhs, s.rhs);
  r.lhs = std::move(a);
  r.rhs = std::move(b);
  r.equal = s.lhs == s.rhs;
  r.witness = s.witness;
}

void fill_sides(IdentityReport& r, const RelationSides<Components>& s) {
  set_exact_sides(r, s.lhs.v, s.rhs.v);
  r.equal = s.lhs == s.rhs;
  r.witness = s.witness;
}

void tag(IdentityReport& r, const CanonicalPath& path) {
  r.gaps = path.base().gaps();
  r.m = path.m();
}

Rational df(const FunctionTable& f, std::int64_t c, std::int64_t m) { return f(c + m) - f(c); }

}  // namespace

// ---------------------------------------------------------------------------
// Gassert-Shor

IdentityReport verify_gassert_shor(const NumericalSemigroup& s, const AperySet& ap, const FunctionTable& f) {
  const auto m = ap.m;
  if (m <= 0 || ap.values.size() != static_cast<std::size_t>(m))
    throw ArgumentError("verify_gassert_shor: malformed Apery set");
  if (f.n_max() < required_domain(s, m))
    throw ArgumentError("verify_gassert_shor: f domain [0, " + std::to_string(f.n_max()) + "] does not reach " +
                        std::to_string(required_domain(s, m)));
  Rational lhs = 0;
  for (auto c : s.gaps()) lhs += f(c + m) - f(c);
  Rational rhs = 0;
  for (std::int64_t i = 0; i < m; ++i) rhs += f(ap.values[static_cast<std::size_t>(i)]) - f(i);

  IdentityReport r;
  r.identity = "gassert-shor";
  r.gaps = s.gaps();
  r.m = m;
  set_exact_sides(r, std::span(&lhs, 1), std::span(&rhs, 1));
  if (!r.equal) {
    for (std::int64_t i = 0; i < m && !r.witness; ++i) {
      Rational cls = 0;
      for (auto c : s.gaps())
        if (c % m == i) cls += f(c + m) - f(c);
      const auto a = ap.values[static_cast<std::size_t>(i)];
      if (cls != f(a) - f(i))
        r.witness = "residue class " + std::to_string(i) + ": gap differences sum to " + to_string(cls) +
                    " but f(a_i) - f(i) = " + to_string(f(a) - f(i)) + " (a_i = " + std::to_string(a) + ")";
    }
    if (!r.witness) r.witness = "totals differ";
  }
  return r;
}

IdentityReport verify_gassert_shor(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f) {
  return verify_gassert_shor(s, apery_set(s, m), f);
}

// ---------------------------------------------------------------------------
// General relation and propositions

IdentityReport verify_general(const CanonicalPath& path, const FunctionTable& f, const SymmetricSpec& spec) {
  check_domain(path, f);
  const auto p = spec.p;
  check_p(path, p);
  if (spec.kind == SymmetricSpec::Kind::divided_difference) {
    const auto pts = evaluation_points(path);
    if (auto hit = f.collision(pts))
      throw ArgumentError("divided-difference kind needs injective f: f(" + std::to_string(hit->first) + ") = f(" +
                          std::to_string(hit->second) + ")");
  }
  const auto m = path.m();
  auto F = [&](std::span<const Rational> xs) { return spec.evaluate(xs); };

  auto sides = evaluate_relation<Poly>(
      path,
      [&](std::size_t i) {
        const auto& st = path.step(i);
        const auto pool = f.image(st.t_set);
        const Rational up = f(st.frobenius_added + m);
        const Rational down = f(st.frobenius_added);
        return subset_sum<Poly>(pool, p - 1, std::span(&up, 1), F) -
               subset_sum<Poly>(pool, p - 1, std::span(&down, 1), F);
      },
      [&](std::span<const std::int64_t> set) { return subset_sum<Poly>(f.image(set), p, {}, F); });

  IdentityReport r;
  r.identity = "general";
  r.params = {{"F", spec.name()}, {"p", p}};
  if (spec.kind == SymmetricSpec::Kind::inverse_product_z) r.params["z"] = to_string(spec.z);
  tag(r, path);
  fill_sides(r, sides);
  return r;
}

IdentityReport verify_prop1(const CanonicalPath& path, const FunctionTable& f, std::size_t p) {
  check_domain(path, f);
  check_p(path, p);
  const auto m = path.m();
  // sum over |I| = size of prod_{x in I} (z + x)
  auto products = [](std::span<const Rational> pool, std::size_t size) {
    check_subset_count(pool.size(), size);
    const auto sc = scale(pool);
    std::vector<Integer> acc(size + 1);
    // state: coefficients of prod (Z + X_j), Z = L z
    for_each_combination_state(
        pool.size(), size, std::vector<Integer>{1},
        [&](const std::vector<Integer>& parent, std::size_t j, std::vector<Integer>& child) {
          child.assign(parent.size() + 1, 0);
          for (std::size_t i = 0; i < parent.size(); ++i) {
            child[i] += parent[i] * sc.X[j];
            child[i + 1] += parent[i];
          }
        },
        [&](const std::vector<Integer>& st) {
          for (std::size_t i = 0; i < st.size(); ++i) acc[i] += st[i];
        });
    std::vector<Rational> coeffs(size + 1);
    for (std::size_t i = 0; i <= size; ++i) coeffs[i] = ratio(acc[i], ipow(sc.L, size - i));
    return Poly(std::move(coeffs));
  };
  auto sides = evaluate_relation<Poly>(
      path,
      [&](std::size_t i) {
        const auto& st = path.step(i);
        return df(f, st.frobenius_added, m) * products(f.image(st.t_set), p - 1);
      },
      [&](std::span<const std::int64_t> set) { return products(f.image(set), p); });
  IdentityReport r;
  r.identity = "prop1";
  r.params = {{"p", p}, {"components", "coefficients of z^0, z^1, ..."}};
  tag(r, path);
  fill_sides(r, sides);
  return r;
}

std::size_t prop2_degree_bound(const CanonicalPath& path, const FunctionTable& f) {
  std::set<Rational> distinct;
  for (auto x : evaluation_points(path)) distinct.insert(f(x));
  return distinct.size() - 1;
}

std::vector<Rational> prop2_samples(const CanonicalPath& path, const FunctionTable& f, std::size_t count) {
  std::set<Rational> poles;
  for (auto x : evaluation_points(path)) poles.insert(f(x));
  std::vector<Rational> out;
  // k + 1/7 hits no integer pole; the pole check still guards rational ones
  for (std::int64_t k = 0; out.size() < count; ++k) {
    Rational z = make_rational(7 * k + 1, 7) + 1000;
    if (!poles.contains(z)) out.push_back(z);
  }
  return out;
}

IdentityReport verify_prop2(const CanonicalPath& path, const FunctionTable& f, std::size_t p,
                            std::span<const Rational> z_samples) {
  check_domain(path, f);
  check_p(path, p);
  if (z_samples.empty()) throw ArgumentError("verify_prop2: no sample points");
  for (auto x : evaluation_points(path))
    for (const auto& z : z_samples)
      if (f(x) == z)
        throw ArgumentError("verify_prop2: sample z = " + to_string(z) + " hits the pole f(" + std::to_string(x) +
                            "); resample");
  const auto m = path.m();
  const std::size_t ns = z_samples.size();
  // per sample, sum over |I| = size of prod_{x in I} (z - x)^{-1}
  auto inv_products = [&](std::span<const Rational> pool, std::size_t size) {
    check_subset_count(pool.size(), size);
    std::vector<Rational> all(pool.begin(), pool.end());
    all.insert(all.end(), z_samples.begin(), z_samples.end());
    const auto sc = scale(all);
    const std::size_t np = pool.size();
    // y[t][j] = L (z_t - x_j); the sum is L^size sum_I (prod_{j not in I} y) / prod_j y
    std::vector<std::vector<Integer>> y(ns, std::vector<Integer>(np));
    std::vector<Integer> y_all(ns, 1);
    for (std::size_t t = 0; t < ns; ++t)
      for (std::size_t j = 0; j < np; ++j) {
        y[t][j] = sc.X[np + t] - sc.X[j];
        y_all[t] *= y[t][j];
      }
    std::vector<Integer> acc(ns);
    Integer q;
    for_each_combination_state(
        np, size, std::vector<Integer>(ns, 1),
        [&](const std::vector<Integer>& parent, std::size_t j, std::vector<Integer>& child) {
          child.resize(ns);
          for (std::size_t t = 0; t < ns; ++t) child[t] = parent[t] * y[t][j];
        },
        [&](const std::vector<Integer>& st) {
          for (std::size_t t = 0; t < ns; ++t) {
            mpz_divexact(q.get_mpz_t(), y_all[t].get_mpz_t(), st[t].get_mpz_t());
            acc[t] += q;
          }
        });
    Components c;
    c.v.resize(ns);
    const Integer lp = ipow(sc.L, size);
    for (std::size_t t = 0; t < ns; ++t) c.v[t] = ratio(acc[t] * lp, y_all[t]);
    return c;
  };
  auto sides = evaluate_relation<Components>(
      path,
      [&](std::size_t i) {
        const auto& st = path.step(i);
        const Rational lo = f(st.frobenius_added);
        const Rational hi = f(st.frobenius_added + m);
        Components inner = inv_products(f.image(st.t_set), p - 1);
        for (std::size_t t = 0; t < ns; ++t) {
          const auto& z = z_samples[t];
          inner.v[t] *= (hi - lo) / ((z - lo) * (z - hi));
        }
        return inner;
      },
      [&](std::span<const std::int64_t> set) { return inv_products(f.image(set), p); });
  const auto bound = prop2_degree_bound(path, f);
  IdentityReport r;
  r.identity = "prop2";
  r.params = {{"p", p},
              {"z_samples", to_strings(z_samples)},
              {"degree_bound", bound},
              {"certified", z_samples.size() >= bound + 1}};
  tag(r, path);
  fill_sides(r, sides);
  return r;
}

IdentityReport verify_prop3(const CanonicalPath& path, const FunctionTable& f, std::size_t p, int k) {
  check_domain(path, f);
  check_p(path, p);
  if (k < 1 || static_cast<std::size_t>(k) > p)
    throw ArgumentError("verify_prop3: need 1 <= k <= p, got k = " + std::to_string(k));
  const auto m = path.m();
  // sum over |I| = size of e_j(f{I}); e_j(x) = e_j(X) / L^j
  auto e_sum = [](std::span<const Rational> pool, std::size_t size, int j) {
    check_subset_count(pool.size(), size);
    const auto sc = scale(pool);
    const auto uj = static_cast<std::size_t>(j);
    std::vector<Integer> root(uj + 1);
    root[0] = 1;
    Integer acc;
    for_each_combination_state(
        pool.size(), size, root,
        [&](const std::vector<Integer>& e, std::size_t i, std::vector<Integer>& out) {
          out = e;
          for (std::size_t d = uj; d >= 1; --d) out[d] += sc.X[i] * e[d - 1];
        },
        [&](const std::vector<Integer>& e) { acc += e[uj]; });
    return ratio(acc, ipow(sc.L, uj));
  };
  auto sides = evaluate_relation<Rational>(
      path,
      [&](std::size_t i) {
        const auto& st = path.step(i);
        return Rational(df(f, st.frobenius_added, m) * e_sum(f.image(st.t_set), p - 1, k - 1));
      },
      [&](std::span<const std::int64_t> set) { return e_sum(f.image(set), p, k); });
  IdentityReport r;
  r.identity = "prop3";
  r.params = {{"p", p}, {"k", k}};
  tag(r, path);
  fill_sides(r, sides);
  return r;
}

IdentityReport verify_prop4(const CanonicalPath& path, const FunctionTable& f, std::size_t p, int k) {
  check_domain(path, f);
  check_p(path, p);
  if (k < 1) throw ArgumentError("verify_prop4: need k >= 1, got k = " + std::to_string(k));
  const auto m = path.m();
  // sum over |I| = size of h_j(f{I} and the extra points); h_j(x) = h_j(X) / L^j
  auto h_sum = [](std::span<const Rational> pool, std::size_t size, int j, std::span<const Rational> extra) {
    check_subset_count(pool.size(), size);
    std::vector<Rational> all(extra.begin(), extra.end());
    all.insert(all.end(), pool.begin(), pool.end());
    const auto sc = scale(all);
    const auto uj = static_cast<std::size_t>(j);
    auto add = [uj](const std::vector<Integer>& h, const Integer& x, std::vector<Integer>& out) {
      out.resize(uj + 1);
      out[0] = h[0];
      for (std::size_t d = 1; d <= uj; ++d) out[d] = h[d] + x * out[d - 1];
    };
    std::vector<Integer> root(uj + 1);
    root[0] = 1;
    for (std::size_t e = 0; e < extra.size(); ++e) {
      std::vector<Integer> next;
      add(root, sc.X[e], next);
      root = std::move(next);
    }
    Integer acc;
    for_each_combination_state(
        pool.size(), size, root,
        [&](const std::vector<Integer>& h, std::size_t i, std::vector<Integer>& out) {
          add(h, sc.X[extra.size() + i], out);
        },
        [&](const std::vector<Integer>& h) { acc += h[uj]; });
    return ratio(acc, ipow(sc.L, uj));
  };
  auto sides = evaluate_relation<Rational>(
      path,
      [&](std::size_t i) {
        const auto& st = path.step(i);
        const std::vector<Rational> ends{f(st.frobenius_added), f(st.frobenius_added + m)};
        return Rational(df(f, st.frobenius_added, m) * h_sum(f.image(st.t_set), p - 1, k - 1, ends));
      },
      [&](std::span<const std::int64_t> set) { return h_sum(f.image(set), p, k, {}); });
  IdentityReport r;
  r.identity = "prop4";
  r.params = {{"p", p}, {"k", k}};
  tag(r, path);
  fill_sides(r, sides);
  return r;
}

std::vector<IdentityReport> verify_prop5(const CanonicalPath& path, const FunctionTable& f, std::size_t p,
                                         std::span<const Poly> ws) {
  check_domain(path, f);
  check_p(path, p);
  if (ws.empty()) return {};
  const auto pts = evaluation_points(path);
  if (auto hit = f.collision(pts))
    throw ArgumentError("verify_prop5: f must be injective on I_m, S^(m), C(S), C(S)+m; f(" +
                        std::to_string(hit->first) + ") = f(" + std::to_string(hit->second) + ")");
  const auto m = path.m();
  const std::size_t nw = ws.size();
  int max_deg = 0;
  for (const auto& w : ws) max_deg = std::max(max_deg, w.degree());
  const auto nd = static_cast<std::size_t>(std::max(max_deg, 0)) + 1;
  // Lagrange form on integer nodes X_j = L x_j. With V = prod_{a<b} (X_a - X_b)
  // and Q_j the same product over pairs avoiding j, the weight of node j is
  // (-1)^j Q_j / V, so sum_j X_j^N / prod_{k != j} (X_j - X_k) = N_N / V.
  struct Nodes {
    std::vector<std::size_t> idx;
    std::vector<Integer> q;
    Integer v = 1;
  };
  // per w, sum over |I| = size of the divided difference on f{I} plus the extra nodes
  auto deltas = [&](std::span<const Rational> pool, std::size_t size, std::span<const Rational> extra) {
    check_subset_count(pool.size(), size);
    std::vector<Rational> xs(extra.begin(), extra.end());
    xs.insert(xs.end(), pool.begin(), pool.end());
    const auto sc = scale(xs);
    const std::size_t nx = xs.size();
    std::vector<std::vector<Integer>> diff(nx, std::vector<Integer>(nx));
    for (std::size_t a = 0; a < nx; ++a)
      for (std::size_t b = 0; b < nx; ++b) diff[a][b] = sc.X[a] - sc.X[b];
    std::vector<std::vector<Integer>> pw(nx, std::vector<Integer>(nd));
    for (std::size_t a = 0; a < nx; ++a) {
      pw[a][0] = 1;
      for (std::size_t d = 1; d < nd; ++d) pw[a][d] = pw[a][d - 1] * sc.X[a];
    }

    auto add = [&](const Nodes& parent, std::size_t g, Nodes& child) {
      Integer r = 1;
      for (auto k : parent.idx) r *= diff[k][g];
      child.idx = parent.idx;
      child.q.resize(parent.q.size() + 1);
      for (std::size_t j = 0; j < parent.idx.size(); ++j) {
        child.q[j] = parent.q[j] * r;
        mpz_divexact(child.q[j].get_mpz_t(), child.q[j].get_mpz_t(), diff[parent.idx[j]][g].get_mpz_t());
      }
      child.q.back() = parent.v;
      child.v = parent.v * r;
      child.idx.push_back(g);
    };
    Nodes root;
    for (std::size_t e = 0; e < extra.size(); ++e) {
      Nodes next;
      add(root, e, next);
      root = std::move(next);
    }
    // exact sums of N_d / V per degree d; integral quotients kept apart from the rest
    std::vector<Integer> whole(nd);
    std::vector<Rational> frac(nd);
    Integer num, quo, rem;
    for_each_combination_state(
        pool.size(), size, root,
        [&](const Nodes& parent, std::size_t j, Nodes& child) { add(parent, extra.size() + j, child); },
        [&](const Nodes& st) {
          for (std::size_t d = 0; d < nd; ++d) {
            num = 0;
            for (std::size_t j = 0; j < st.idx.size(); ++j) {
              if (j % 2 == 0)
                num += pw[st.idx[j]][d] * st.q[j];
              else
                num -= pw[st.idx[j]][d] * st.q[j];
            }
            mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), st.v.get_mpz_t());
            if (rem == 0)
              whole[d] += quo;
            else
              frac[d] += ratio(num, st.v);
          }
        });
    // divided difference of z^d on x = L^{nodes - 1 - d} times the one on X
    const auto nodes = static_cast<long>(size + extra.size());
    std::vector<Rational> by_degree(nd);
    for (std::size_t d = 0; d < nd; ++d)
      by_degree[d] = (Rational(whole[d]) + frac[d]) * lpow(sc.L, nodes - 1 - static_cast<long>(d));
    Components c;
    c.v.resize(nw);
    for (std::size_t w = 0; w < nw; ++w)
      for (std::size_t d = 0; d < ws[w].coeffs().size(); ++d) c.v[w] += ws[w].coeffs()[d] * by_degree[d];
    return c;
  };
  auto sides = evaluate_relation<Components>(
      path,
      [&](std::size_t i) {
        const auto& st = path.step(i);
        const std::vector<Rational> ends{f(st.frobenius_added), f(st.frobenius_added + m)};
        Components c = deltas(f.image(st.t_set), p - 1, ends);
        const Rational d = df(f, st.frobenius_added, m);
        for (auto& x : c.v) x *= d;
        return c;
      },
      [&](std::span<const std::int64_t> set) { return deltas(f.image(set), p, {}); });

  std::vector<IdentityReport> out;
  for (std::size_t w = 0; w < nw; ++w) {
    IdentityReport r;
    r.identity = "prop5";
    r.params = {{"p", p}, {"w", ws[w].to_string()}};
    tag(r, path);
    const Rational& l = sides.lhs.v.at(w);
    const Rational& rr = sides.rhs.v.at(w);
    set_exact_sides(r, std::span(&l, 1), std::span(&rr, 1));
    if (!r.equal) r.witness = sides.witness;
    out.push_back(std::move(r));
  }
  return out;
}

IdentityReport verify_prop5(const CanonicalPath& path, const FunctionTable& f, std::size_t p, const Poly& w) {
  return verify_prop5(path, f, p, std::span(&w, 1)).front();
}

IdentityReport verify_prop6(const CanonicalPath& path, int k, std::size_t p) {
  const auto m = path.m();
  if (k < 1) throw ArgumentError("verify_prop6: need k >= 1");
  if (p < 1 || p >= static_cast<std::size_t>(m))
    throw ArgumentError("verify_prop6: need 1 <= p < m = " + std::to_string(m));
  check_subset_count(static_cast<std::size_t>(m - 1), p);
  const auto uk = static_cast<unsigned long>(k);

  auto kth_powers = [&](std::span<const std::int64_t> set) {
    std::vector<Rational> out;
    for (auto a : set)
      if (a != 0) out.push_back(pow(Rational(a), uk));
    return out;
  };
  // prod over |I| = p subsets of (set \ 0) of sum_{a in I} a^k
  auto vertex = [&](std::span<const std::int64_t> set) {
    const auto pw = kth_powers(set);
    Rational prod = 1;
    for_each_combination(pw.size(), p, [&](std::span<const std::size_t> idx) {
      Rational s = 0;
      for (auto j : idx) s += pw[j];
      prod *= s;
    });
    return prod;
  };
  auto binomial_excess = [&](std::int64_t c) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j)
      s += Rational(binomial(uk, static_cast<unsigned long>(j))) * pow(Rational(c), uk - j) *
           pow(Rational(m), static_cast<unsigned long>(j));
    return s;
  };

  const auto n = path.length();
  std::vector<Rational> factors;
  Rational lhs = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& st = path.step(i);
    const auto c = st.frobenius_added;
    const Rational excess = binomial_excess(c);
    const Rational ck = pow(Rational(c), uk);
    const auto pw = kth_powers(st.t_set);
    Rational factor = 1;
    for_each_combination(pw.size(), p - 1, [&](std::span<const std::size_t> idx) {
      Rational den = ck;
      for (auto j : idx) den += pw[j];
      if (den == 0) throw std::logic_error("verify_prop6: zero denominator with c_i >= 1");
      factor *= 1 + excess / den;
    });
    factors.push_back(factor);
    lhs *= factor;
  }
  const auto top = path.apery(n).sorted_values();
  const auto bottom = residues(m);
  const Rational rhs = vertex(top) / vertex(bottom);

  std::vector<Rational> lhs_parts{lhs};
  std::vector<Rational> rhs_parts{rhs};
  std::vector<std::string> forms{"general"};
  if (p == static_cast<std::size_t>(m) - 1) {
    Rational pl = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      const auto& st = path.step(i);
      Rational den = pow(Rational(st.frobenius_added), uk);
      for (auto a : st.t_set) den += pow(Rational(a), uk);
      pl *= 1 + binomial_excess(st.frobenius_added) / den;
    }
    Rational num = 0, den = 0;
    for (auto a : top) num += pow(Rational(a), uk);
    for (auto a : bottom) den += pow(Rational(a), uk);
    lhs_parts.push_back(pl);
    rhs_parts.push_back(num / den);
    forms.emplace_back("p=m-1");
  }
  if (p == 1 && k == 1) {
    Rational pl = 1;
    for (auto c : path.base().gaps()) pl *= 1 + make_rational(m, c);
    Rational num = 1;
    for (auto a : top)
      if (a != 0) num *= a;
    Rational fact = 1;
    for (std::int64_t j = 2; j < m; ++j) fact *= j;
    lhs_parts.push_back(pl);
    rhs_parts.push_back(num / fact);
    forms.emplace_back("p=1");
  }

  IdentityReport r;
  r.identity = "prop6";
  r.params = {{"p", p}, {"k", k}, {"components", forms}};
  tag(r, path);
  set_exact_sides(r, lhs_parts, rhs_parts);
  if (!r.equal) {
    for (std::size_t i = 1; i <= n && !r.witness; ++i) {
      const auto cur = path.apery(i).sorted_values();
      const auto prev = path.apery(i - 1).sorted_values();
      if (factors[i - 1] != vertex(cur) / vertex(prev))
        r.witness = "step " + std::to_string(i) + ": factor differs from H(S_i)/H(S_{i-1})";
    }
    if (!r.witness) r.witness = "component mismatch";
  }
  return r;
}

IdentityReport verify_telescoping_consistency(const CanonicalPath& path, const FunctionTable& f) {
  check_domain(path, f);
  const auto m = path.m();
  Rational gaps_side = 0;
  for (auto c : path.base().gaps()) gaps_side += f(c + m) - f(c);
  const auto h = VertexFunction::on_path(path, [&](std::size_t, const NumericalSemigroup&, const AperySet& ap) {
    Rational s = 0;
    for (auto a : ap.values) s += f(a);
    return s;
  });
  const auto t = telescoping_sum(h, path);
  IdentityReport r;
  r.identity = "telescoping-consistency";
  r.params = {{"H", "sum of f over the Apery set"}};
  tag(r, path);
  const std::vector<Rational> lhs{gaps_side, t.lhs};
  const std::vector<Rational> rhs{t.lhs, t.rhs};
  set_exact_sides(r, lhs, rhs);
  return r;
}

std::vector<IdentityReport> check_structure(const CanonicalPath& path) {
  const auto m = path.m();
  const auto n = path.length();
  std::vector<IdentityReport> out;
  auto report = [&](std::string name, std::optional<std::string> failure) {
    IdentityReport r;
    r.identity = std::move(name);
    tag(r, path);
    r.equal = !failure.has_value();
    r.witness = std::move(failure);
    out.push_back(std::move(r));
  };

  std::optional<std::string> fail;
  for (std::size_t i = 0; i <= n && !fail; ++i) {
    auto chk = check_apery_invariants(path.vertex(i), path.apery(i));
    if (!chk.ok) fail = "S_" + std::to_string(i) + ": " + chk.failure;
  }
  report("apery-invariants", fail);

  fail.reset();
  for (std::size_t v = 0; v <= n && !fail; ++v) {
    const auto& s = path.vertex(v);
    const auto& ap = path.apery(v);
    for (std::int64_t i = 0; i < m && !fail; ++i)
      for (std::int64_t j = 0; j < ap.counts[static_cast<std::size_t>(i)]; ++j)
        if (s.contains(i + m * j)) {
          fail = "S_" + std::to_string(v) + ": " + std::to_string(i + m * j) + " should be a gap";
          break;
        }
  }
  report("gap-chain-containment", fail);

  fail.reset();
  {
    const auto& s = path.base();
    const auto& ap = path.apery(n);
    const std::int64_t window = s.frobenius() + 2 * m;
    std::vector<char> rebuilt(static_cast<std::size_t>(std::max<std::int64_t>(window, 0)) + 1, 0);
    for (auto a : ap.values)
      for (std::int64_t x = a; x <= window; x += m) rebuilt[static_cast<std::size_t>(x)] = 1;
    for (std::int64_t x = 0; x <= window && !fail; ++x)
      if (static_cast<bool>(rebuilt[static_cast<std::size_t>(x)]) != s.contains(x))
        fail = "membership of " + std::to_string(x) + " differs from S^(m) + mZ";
  }
  report("apery-reconstruction", fail);

  fail.reset();
  for (std::size_t i = 1; i <= n && !fail; ++i) {
    const auto c = path.step(i).frobenius_added;
    if (path.vertex(i).frobenius() != c) fail = "F(S_" + std::to_string(i) + ") != c_i";
    auto expected = path.apery(i).sorted_values();
    auto it = std::find(expected.begin(), expected.end(), c + m);
    if (it == expected.end()) {
      fail = "c_i + m missing from Apery set of S_" + std::to_string(i);
      break;
    }
    *it = c;
    std::sort(expected.begin(), expected.end());
    if (expected != path.apery(i - 1).sorted_values()) fail = "Apery update fails at step " + std::to_string(i);
    std::size_t changed = 0;
    for (std::int64_t r = 0; r < m; ++r)
      changed += path.apery(i).values[static_cast<std::size_t>(r)] !=
                 path.apery(i - 1).values[static_cast<std::size_t>(r)];
    if (changed != 1) fail = "step " + std::to_string(i) + " changes " + std::to_string(changed) + " residues";
  }
  report("apery-update", fail);

  fail.reset();
  for (std::size_t v = 0; v <= n && !fail; ++v) {
    const auto hp = height_partition(path.vertex(v), m);
    const auto conj = conjugate(path.apery(v).counts);
    if (conj != hp.b) fail = "S_" + std::to_string(v) + ": conjugate of A-partition differs from height counts";
  }
  report("height-conjugacy", fail);
  return out;
}

IdentityReport verify_qbernoulli_gs(const NumericalSemigroup& s, std::int64_t m, const QBernoulliParams& params,
                                    int n, double x, double tolerance) {
  if (params.alpha < 1) throw ArgumentError("verify_qbernoulli_gs: alpha must be >= 1");
  if (n < 1) throw ArgumentError("verify_qbernoulli_gs: n must be >= 1");
  const auto ap = apery_set(s, m);
  const auto f = build_f_semigroup(params, n, m, x);
  double lhs = 0;
  for (auto c : s.gaps()) lhs += f.difference(c);
  double rhs = 0;
  for (std::int64_t i = 0; i < m; ++i) rhs += f(ap.values[static_cast<std::size_t>(i)]) - f(i);

  IdentityReport r;
  r.identity = "qbernoulli-gassert-shor";
  r.params = {{"q", params.q}, {"l", params.l}, {"y", params.y}, {"lambda", params.lambda},
              {"alpha", params.alpha}, {"n", n}, {"x", x}};
  r.gaps = s.gaps();
  r.m = m;
  r.lhs = {format_double(lhs)};
  r.rhs = {format_double(rhs)};
  r.residual = std::abs(lhs - rhs);
  r.equal = *r.residual < tolerance;
  if (!r.equal) r.witness = "residual " + format_double(*r.residual) + " exceeds " + format_double(tolerance);
  return r;
}

// ---------------------------------------------------------------------------
// Convenience overloads

IdentityReport verify_general(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f,
                              const SymmetricSpec& spec) {
  return verify_general(CanonicalPath(s, m), f, spec);
}
IdentityReport verify_prop1(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f, std::size_t p) {
  return verify_prop1(CanonicalPath(s, m), f, p);
}
IdentityReport verify_prop3(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f, std::size_t p,
                            int k) {
  return verify_prop3(CanonicalPath(s, m), f, p, k);
}
IdentityReport verify_prop4(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f, std::size_t p,
                            int k) {
  return verify_prop4(CanonicalPath(s, m), f, p, k);
}
IdentityReport verify_prop5(const NumericalSemigroup& s, std::int64_t m, const FunctionTable& f, std::size_t p,
                            const Poly& w) {
  return verify_prop5(CanonicalPath(s, m), f, p, w);
}
IdentityReport verify_prop6(const NumericalSemigroup& s, std::int64_t m, int k, std::size_t p) {
  return verify_prop6(CanonicalPath(s, m), k, p);
}

}  // namespace apery
