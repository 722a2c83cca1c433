#include <gtest/gtest.h>

#include <random>

#include "apery/errors.hpp"
#include "apery/identities.hpp"
#include "apery/sampling.hpp"
#include "apery/symmetric.hpp"
#include "oracles.hpp"

using namespace apery;
using V = std::vector<std::int64_t>;
using Q = std::vector<Rational>;

namespace {

const NumericalSemigroup& three_five() {
  static const auto s = NumericalSemigroup::from_generators(V{3, 5});
  return s;
}

FunctionTable square(std::int64_t n) {
  return FunctionTable::from(n, [](std::int64_t x) { return Rational(x * x); });
}

FunctionTable identity(std::int64_t n) {
  return FunctionTable::from(n, [](std::int64_t x) { return Rational(x); });
}

Rational single(const std::vector<std::string>& side) {
  EXPECT_EQ(side.size(), 1u);
  return parse_rational(side.at(0));
}

struct Sides {
  Rational lhs, rhs;
};

/// Brute-force evaluation of a relation of the general shape: per-step sums
/// over (p-1)-subsets J of T_i, and p-subset sums over the Apery set and I_m.
Sides brute(const CanonicalPath& path, const FunctionTable& f, std::size_t p,
            const std::function<Rational(const Q& j, const Rational& lo, const Rational& hi)>& step,
            const std::function<Rational(const Q& i)>& vertex) {
  Sides s{0, 0};
  const auto m = path.m();
  for (std::size_t i = 1; i <= path.length(); ++i) {
    const auto& st = path.step(i);
    Q pool;
    for (auto t : st.t_set) pool.push_back(f(t));
    const Rational lo = f(st.frobenius_added), hi = f(st.frobenius_added + m);
    oracle::subsets(pool.size(), p - 1, [&](std::uint32_t mask) { s.lhs += step(oracle::pick(pool, mask), lo, hi); });
  }
  Q top, bottom;
  for (auto a : path.apery(path.length()).values) top.push_back(f(a));
  for (std::int64_t i = 0; i < m; ++i) bottom.push_back(f(i));
  oracle::subsets(top.size(), p, [&](std::uint32_t mask) { s.rhs += vertex(oracle::pick(top, mask)); });
  oracle::subsets(bottom.size(), p, [&](std::uint32_t mask) { s.rhs -= vertex(oracle::pick(bottom, mask)); });
  return s;
}

Q with(Q xs, std::initializer_list<Rational> extra) {
  xs.insert(xs.end(), extra.begin(), extra.end());
  return xs;
}

/// Polynomial with the report's coefficient strings, evaluated at z.
Rational eval_coeffs(const std::vector<std::string>& coeffs, const Rational& z) {
  Rational s = 0, zp = 1;
  for (const auto& c : coeffs) {
    s += parse_rational(c) * zp;
    zp *= z;
  }
  return s;
}

struct Instance {
  NumericalSemigroup s;
  std::int64_t m;
  FunctionTable f;
};

Instance draw(Rng& rng, std::int64_t max_f = 40) {
  while (true) {
    auto s = random_semigroup(rng, max_f);
    const auto m = random_member(rng, s, 8);
    if (m == 0) continue;
    auto f = random_injective_function(rng, required_domain(s, m));
    return {std::move(s), m, std::move(f)};
  }
}

}  // namespace

TEST(GassertShor, WorkedInstance) {
  const auto r = verify_gassert_shor(three_five(), 3, square(10));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(single(r.lhs), 120);
  EXPECT_EQ(single(r.rhs), 120);
  EXPECT_EQ(r.identity, "gassert-shor");
  EXPECT_FALSE(r.witness.has_value());
}

TEST(GassertShor, TrivialCases) {
  const auto full = NumericalSemigroup::from_generators(V{1});
  const auto r = verify_gassert_shor(full, 4, square(4));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(single(r.lhs), 0);
  const auto c = verify_gassert_shor(three_five(), 3, FunctionTable::from(10, [](std::int64_t) { return Rational(5); }));
  EXPECT_EQ(single(c.lhs), 0);
  EXPECT_EQ(single(c.rhs), 0);
  EXPECT_THROW(verify_gassert_shor(three_five(), 3, square(9)), ArgumentError);
}

TEST(GassertShor, CorruptedAperySetDetected) {
  auto ap = apery_set(three_five(), 3);
  ap.values[1] -= 3;  // 10 -> 7, one value off by m
  const auto r = verify_gassert_shor(three_five(), ap, square(10));
  EXPECT_FALSE(r.equal);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->find("residue class 1"), std::string::npos) << *r.witness;
}

TEST(GassertShor, RandomInstances) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = draw(rng, 60);
    const auto r = verify_gassert_shor(inst.s, inst.m, inst.f);
    EXPECT_TRUE(r.equal);
    Rational lhs = 0, rhs = 0;
    for (auto c : oracle::gaps(inst.s.minimal_generators())) lhs += inst.f(c + inst.m) - inst.f(c);
    const auto ap = oracle::apery(inst.s.gaps(), inst.m);
    for (std::int64_t i = 0; i < inst.m; ++i) rhs += inst.f(ap[static_cast<std::size_t>(i)]) - inst.f(i);
    EXPECT_EQ(single(r.lhs), lhs);
    EXPECT_EQ(single(r.rhs), rhs);
  }
}

TEST(General, ReducesToGassertShorAtPOne) {
  const CanonicalPath path(three_five(), 3);
  const auto f = square(10);
  const auto r = verify_general(path, f, SymmetricSpec::elementary(1, 1));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(single(r.lhs), 120);
}

TEST(General, ElementaryTwoAgainstBruteForce) {
  const CanonicalPath path(three_five(), 3);
  const auto f = identity(10);
  const auto r = verify_general(path, f, SymmetricSpec::elementary(2, 2));
  EXPECT_TRUE(r.equal);
  const auto e2 = [](const Q& xs) -> Rational { return oracle::elementary(2, xs); };
  const auto b = brute(
      path, f, 2, [&](const Q& j, const Rational& lo, const Rational& hi) -> Rational { return e2(with(j, {hi})) - e2(with(j, {lo})); },
      e2);
  EXPECT_EQ(single(r.lhs), b.lhs);
  EXPECT_EQ(single(r.rhs), b.rhs);
}

TEST(General, NonSymmetricFunctionReportsInequality) {
  const CanonicalPath path(three_five(), 3);
  const auto f = square(10);
  const auto first = SymmetricSpec::from_function(
      2, [](std::span<const Rational> xs) { return Rational(xs[0] - 2 * xs[1]); }, "x1 - 2 x2");
  const auto r = verify_general(path, f, first);
  EXPECT_FALSE(r.equal);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->find("step"), std::string::npos);
}

TEST(General, DividedDifferenceNeedsInjectiveF) {
  const CanonicalPath path(three_five(), 3);
  const auto parity = FunctionTable::from(10, [](std::int64_t x) { return Rational(x % 2); });
  EXPECT_FALSE(parity.injective());
  EXPECT_THROW(verify_general(path, parity, SymmetricSpec::divided_difference(2, Poly::monomial(3))), ArgumentError);
  EXPECT_THROW(verify_general(path, square(10), SymmetricSpec::elementary(4, 1)), ArgumentError);
  EXPECT_THROW(verify_general(path, square(10), SymmetricSpec::elementary(0, 1)), ArgumentError);
}

TEST(Prop1, PolynomialAgainstBruteForce) {
  const CanonicalPath path(three_five(), 3);
  const auto f = identity(10);
  for (std::size_t p = 1; p <= 3; ++p) {
    const auto r = verify_prop1(path, f, p);
    EXPECT_TRUE(r.equal);
    for (int zi = 0; zi <= static_cast<int>(p); ++zi) {
      const Rational z = make_rational(2 * zi - 3, 5);
      auto prod = [&](const Q& xs) -> Rational {
        Rational a = 1;
        for (const auto& x : xs) a *= z + x;
        return a;
      };
      const auto b = brute(path, f, p, [&](const Q& j, const Rational& lo, const Rational& hi) -> Rational { return (hi - lo) * prod(j); },
                           prod);
      EXPECT_EQ(eval_coeffs(r.lhs, z), b.lhs);
      EXPECT_EQ(eval_coeffs(r.rhs, z), b.rhs);
    }
  }
}

TEST(Prop2, SamplesAgainstBruteForce) {
  const CanonicalPath path(three_five(), 3);
  const auto f = identity(10);
  const Q samples{100, make_rational(1, 3)};
  for (std::size_t p = 1; p <= 3; ++p) {
    const auto r = verify_prop2(path, f, p, samples);
    EXPECT_TRUE(r.equal);
    ASSERT_EQ(r.lhs.size(), 2u);
    for (std::size_t t = 0; t < samples.size(); ++t) {
      const auto& z = samples[t];
      auto inv = [&](const Q& xs) -> Rational {
        Rational a = 1;
        for (const auto& x : xs) a /= z - x;
        return a;
      };
      const auto b = brute(
          path, f, p,
          [&](const Q& j, const Rational& lo, const Rational& hi) -> Rational { return (hi - lo) / ((z - lo) * (z - hi)) * inv(j); },
          inv);
      EXPECT_EQ(parse_rational(r.lhs[t]), b.lhs);
      EXPECT_EQ(parse_rational(r.rhs[t]), b.rhs);
    }
  }
  EXPECT_THROW(verify_prop2(path, f, 2, Q{7}), ArgumentError);
}

TEST(Prop2, DegreeBoundAndSamples) {
  const CanonicalPath path(three_five(), 3);
  const auto f = identity(10);
  // 7 distinct values over {0,1,2} u {0,10,5} u {1,2,4,7} u {4,5,7,10}
  EXPECT_EQ(prop2_degree_bound(path, f), 6u);
  const auto zs = prop2_samples(path, f, 8);
  EXPECT_EQ(zs.size(), 8u);
  const auto r = verify_prop2(path, f, 2, zs);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.params["degree_bound"], 6);
  EXPECT_EQ(r.params["certified"], true);
}

TEST(Prop3, WorkedInstance) {
  const CanonicalPath path(three_five(), 3);
  const auto r = verify_prop3(path, identity(10), 3, 2);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(single(r.lhs), 48);
  EXPECT_EQ(single(r.rhs), 48);
  EXPECT_THROW(verify_prop3(path, identity(10), 2, 3), ArgumentError);
  EXPECT_THROW(verify_prop3(path, identity(10), 2, 0), ArgumentError);
}

TEST(Prop4, WorkedInstance) {
  const CanonicalPath path(three_five(), 3);
  const auto r = verify_prop4(path, identity(10), 3, 2);
  EXPECT_TRUE(r.equal);
  const Rational expected = oracle::complete(2, Q{0, 10, 5}) - oracle::complete(2, Q{0, 1, 2});
  EXPECT_EQ(single(r.rhs), expected);
  EXPECT_THROW(verify_prop4(path, identity(10), 2, 0), ArgumentError);
}

TEST(Prop34, KOneIsGassertShor) {
  const CanonicalPath path(three_five(), 3);
  const auto f = square(10);
  for (std::size_t p = 1; p <= 3; ++p) {
    EXPECT_EQ(single(verify_prop3(path, f, p, 1).lhs) / Rational(binomial(2, p - 1)), 120);
    EXPECT_TRUE(verify_prop4(path, f, p, 1).equal);
  }
  EXPECT_EQ(single(verify_prop4(path, f, 1, 1).lhs), 120);
}

TEST(Prop5, Examples) {
  const CanonicalPath path(three_five(), 3);
  const auto f = square(10);
  // w = z^m with p = m is the Gassert-Shor sum
  const auto r = verify_prop5(path, f, 3, Poly::monomial(3));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(single(r.lhs), 120);
  // deg w < p - 1 annihilates both sides
  const auto z = verify_prop5(path, f, 3, Poly::monomial(1));
  EXPECT_EQ(single(z.lhs), 0);
  EXPECT_EQ(single(z.rhs), 0);
  const auto parity = FunctionTable::from(10, [](std::int64_t x) { return Rational(x % 2); });
  EXPECT_THROW(verify_prop5(path, parity, 2, Poly::monomial(3)), ArgumentError);
}

TEST(Prop5, RandomFAgainstLagrangeOracle) {
  Rng rng(42);
  const CanonicalPath path(three_five(), 3);
  const auto f = random_injective_function(rng, 10);
  const Poly w = Poly::monomial(4);
  const auto r = verify_prop5(path, f, 2, w);
  EXPECT_TRUE(r.equal);
  const Q coeffs{0, 0, 0, 0, 1};
  const auto b = brute(
      path, f, 2,
      [&](const Q& j, const Rational& lo, const Rational& hi) -> Rational { return (hi - lo) * oracle::lagrange(coeffs, with(j, {lo, hi})); },
      [&](const Q& i) -> Rational { return oracle::lagrange(coeffs, i); });
  EXPECT_EQ(single(r.lhs), b.lhs);
  EXPECT_EQ(single(r.rhs), b.rhs);
}

TEST(Prop6, WorkedInstances) {
  const CanonicalPath path(three_five(), 3);
  const auto r1 = verify_prop6(path, 1, 1);
  EXPECT_TRUE(r1.equal);
  EXPECT_EQ(parse_rational(r1.lhs.at(0)), 25);
  EXPECT_EQ(parse_rational(r1.rhs.at(0)), 25);
  // p = m - 1 = 2, k = 1
  const auto r2 = verify_prop6(path, 1, 2);
  EXPECT_TRUE(r2.equal);
  EXPECT_EQ(parse_rational(r2.rhs.at(0)), 5);
  // direct product over the path: 1 + 3 / (sum of T_i \ 0 + c_i)
  Rational lhs = 1;
  for (std::size_t i = 1; i <= path.length(); ++i) {
    Rational s = path.step(i).frobenius_added;
    for (auto t : path.step(i).t_set) s += t;
    lhs *= 1 + 3 / s;
  }
  EXPECT_EQ(parse_rational(r2.lhs.at(0)), lhs);
  // k = 2, p = 1: factors 1 + (6c + 9) / c^2
  const auto r3 = verify_prop6(path, 2, 1);
  EXPECT_TRUE(r3.equal);
  Rational l3 = 1;
  for (Rational c : {1, 2, 4, 7}) l3 *= 1 + (6 * c + 9) / (c * c);
  EXPECT_EQ(parse_rational(r3.lhs.at(0)), l3);
  EXPECT_THROW(verify_prop6(path, 1, 3), ArgumentError);
  EXPECT_THROW(verify_prop6(path, 0, 1), ArgumentError);
}

TEST(CrossChecks, EnumerationPathsAgree) {
  // The proposition verifiers and verify_general evaluate the same sums by
  // different code paths; every side must coincide.
  Rng rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const auto inst = draw(rng, 30);
    const CanonicalPath path(inst.s, inst.m);
    const auto& f = inst.f;
    for (std::size_t p = 1; p <= static_cast<std::size_t>(inst.m); ++p) {
      for (int k = 1; k <= std::min<int>(3, static_cast<int>(p)); ++k) {
        const auto g = verify_general(path, f, SymmetricSpec::elementary(p, k));
        EXPECT_TRUE(g.equal);
        EXPECT_EQ(g.rhs, verify_prop3(path, f, p, k).rhs);
      }
      for (int k = 1; k <= 3; ++k) {
        const auto g = verify_general(path, f, SymmetricSpec::complete(p, k));
        const auto r = verify_prop4(path, f, p, k);
        EXPECT_TRUE(r.equal);
        EXPECT_EQ(g.rhs, r.rhs);
      }
      const auto g1 = verify_general(path, f, SymmetricSpec::product_z(p));
      const auto p1 = verify_prop1(path, f, p);
      EXPECT_TRUE(g1.equal);
      EXPECT_EQ(g1.rhs, p1.rhs);
      EXPECT_EQ(g1.lhs, p1.lhs);

      const Rational z = make_rational(100003, 7);
      const auto g2 = verify_general(path, f, SymmetricSpec::inverse_product_z(p, z));
      const auto p2 = verify_prop2(path, f, p, Q{z});
      EXPECT_TRUE(g2.equal);
      EXPECT_EQ(g2.rhs, p2.rhs);
      EXPECT_EQ(single(g2.lhs), single(p2.lhs));

      for (unsigned j = 0; j <= 2; ++j) {
        const auto w = Poly::monomial(static_cast<unsigned>(p) - 1 + j, make_rational(3, 2)) + Poly::constant(7);
        const auto g5 = verify_general(path, f, SymmetricSpec::divided_difference(p, w));
        const auto p5 = verify_prop5(path, f, p, w);
        EXPECT_TRUE(p5.equal);
        EXPECT_EQ(g5.rhs, p5.rhs);
      }
    }
  }
}

TEST(Telescoping, ConsistencyWithGassertShor) {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = draw(rng);
    const CanonicalPath path(inst.s, inst.m);
    const auto r = verify_telescoping_consistency(path, inst.f);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.lhs.at(0), verify_gassert_shor(inst.s, inst.m, inst.f).lhs.at(0));
  }
}

TEST(Structure, AllChecksPass) {
  Rng rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = draw(rng, 60);
    for (const auto& r : check_structure(CanonicalPath(inst.s, inst.m))) EXPECT_TRUE(r.equal) << r.identity;
  }
  const auto names = check_structure(CanonicalPath(three_five(), 3));
  ASSERT_EQ(names.size(), 5u);
}

TEST(QBernoulliSpecialization, ThreeFive) {
  QBernoulliParams params;
  params.alpha = 1;
  for (double x : {0.0, 0.5}) {
    const auto r = verify_qbernoulli_gs(three_five(), 3, params, 2, x, 1e-9);
    EXPECT_TRUE(r.equal) << "x = " << x;
    ASSERT_TRUE(r.residual.has_value());
    EXPECT_LT(*r.residual, 1e-9);
  }
  params.alpha = 3;
  const auto zero = verify_qbernoulli_gs(three_five(), 3, params, 2, 0.0);
  EXPECT_EQ(*zero.residual, 0.0);
  EXPECT_THROW(verify_qbernoulli_gs(three_five(), 3, params, 0, 0.0), ArgumentError);
}

TEST(Report, JsonShape) {
  const auto r = verify_gassert_shor(three_five(), 3, square(10));
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"semigroup", "m", "identity", "params", "lhs", "rhs", "equal", "residual",
                                            "witness"}));
  EXPECT_EQ(j["lhs"], "120/1");
  EXPECT_TRUE(j["residual"].is_null());
  EXPECT_TRUE(j["witness"].is_null());
}
