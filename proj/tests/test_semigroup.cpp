#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "apery/errors.hpp"
#include "apery/partition.hpp"
#include "apery/sampling.hpp"
#include "apery/semigroup.hpp"
#include "oracles.hpp"

using namespace apery;
using V = std::vector<std::int64_t>;

namespace {

NumericalSemigroup gens(V g) { return NumericalSemigroup::from_generators(g); }

}  // namespace

TEST(Semigroup, ThreeFive) {
  const auto s = gens({3, 5});
  EXPECT_EQ(s.gaps(), (V{1, 2, 4, 7}));
  EXPECT_EQ(s.frobenius(), 7);
  EXPECT_EQ(s.genus(), 4u);
  EXPECT_EQ(s.minimal_generators(), (V{3, 5}));
  EXPECT_EQ(s.describe(), "<3,5>");
  EXPECT_TRUE(s.contains(8));
  EXPECT_FALSE(s.contains(7));
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(-1));
}

TEST(Semigroup, FullSemigroup) {
  const auto s = gens({1});
  EXPECT_TRUE(s.gaps().empty());
  EXPECT_TRUE(s.is_full());
  EXPECT_EQ(s.frobenius(), -1);
  EXPECT_TRUE(s.contains(0));
  EXPECT_EQ(s, NumericalSemigroup::from_gaps(V{}));
  EXPECT_EQ(s.describe(), "Z>=0");
}

TEST(Semigroup, GeneratorErrors) {
  EXPECT_THROW(gens({4, 6}), ArgumentError);
  EXPECT_THROW(gens({}), ArgumentError);
  EXPECT_THROW(gens({0, 3}), ArgumentError);
}

TEST(Semigroup, FromGaps) {
  EXPECT_EQ(NumericalSemigroup::from_gaps(V{1, 2, 4, 7}), gens({3, 5}));
  try {
    NumericalSemigroup::from_gaps(V{2});
    FAIL() << "closure violation accepted";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.s(), 1);
    EXPECT_EQ(e.t(), 1);
  }
  EXPECT_THROW(NumericalSemigroup::from_gaps(V{0, 1}), ArgumentError);
  EXPECT_EQ(NumericalSemigroup::from_gaps(V{1, 3, 5}), gens({2, 7}));
  EXPECT_THROW(NumericalSemigroup::from_gaps(V{1, 3, 4, 6}), ValidationError);
}

TEST(Semigroup, AperyExamples) {
  const auto s = gens({3, 5});
  auto a3 = apery_set(s, 3);
  EXPECT_EQ(a3.values, (V{0, 10, 5}));
  EXPECT_EQ(a3.counts, (V{0, 3, 1}));
  auto a5 = apery_set(s, 5);
  EXPECT_EQ(a5.values, (V{0, 6, 12, 3, 9}));
  EXPECT_EQ(a5.counts, (V{0, 1, 2, 0, 1}));
  EXPECT_EQ(apery_set(gens({1}), 4).values, (V{0, 1, 2, 3}));
  EXPECT_THROW(apery_set(s, 7), ArgumentError);
  EXPECT_THROW(apery_set(s, 0), ArgumentError);
}

TEST(Semigroup, HeightPartition) {
  const auto s = gens({3, 5});
  const auto hp = height_partition(s, 3);
  EXPECT_EQ(hp.b, (V{2, 1, 1}));
  EXPECT_EQ(as_partition(apery_set(s, 3).counts), (V{3, 1}));
  EXPECT_EQ(conjugate(V{3, 1}), hp.b);
  EXPECT_TRUE(height_partition(gens({1}), 2).b.empty());
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(V{5, 1}), (V{2, 1, 1, 1, 1}));
  EXPECT_EQ(conjugate(V{}), V{});
  EXPECT_EQ(conjugate(V{0, 2, 0, 1}), (V{2, 1}));
  EXPECT_EQ(conjugate(conjugate(V{4, 4, 2, 1})), (V{4, 4, 2, 1}));
}

TEST(SemigroupProperty, MatchesSieveOracle) {
  Rng rng(11);
  std::uniform_int_distribution<std::int64_t> count(2, 4), gen(2, 20);
  int checked = 0;
  while (checked < 200) {
    V g;
    const auto c = count(rng);
    for (int i = 0; i < c; ++i) g.push_back(gen(rng));
    if (gcd_of(g) != 1) continue;
    const auto s = gens(g);
    EXPECT_EQ(s.gaps(), oracle::gaps(g)) << "gens " << testing::PrintToString(g);
    EXPECT_EQ(NumericalSemigroup::from_gaps(s.gaps()), s);
    // minimal generators regenerate the same semigroup and none is redundant
    EXPECT_EQ(gens(s.minimal_generators()), s);
    for (auto x : s.minimal_generators()) {
      V others;
      for (auto y : s.minimal_generators())
        if (y != x) others.push_back(y);
      if (!others.empty()) {
        const auto in = oracle::members(others, x);
        EXPECT_FALSE(in[static_cast<std::size_t>(x)]) << x << " is redundant";
      }
    }
    ++checked;
  }
}

TEST(SemigroupProperty, AperyInvariants) {
  Rng rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const auto s = random_semigroup(rng);
    for (std::int64_t m = 1; m <= s.frobenius() + 1 + s.multiplicity(); ++m) {
      if (!s.contains(m)) continue;
      const auto ap = apery_set(s, m);
      const auto check = check_apery_invariants(s, ap);
      EXPECT_TRUE(check.ok) << check.failure;
      EXPECT_EQ(ap.values, oracle::apery(s.gaps(), m));
      // gap chains i, i+m, ..., i+m(A_i - 1)
      for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < ap.counts[static_cast<std::size_t>(i)]; ++j)
          EXPECT_FALSE(s.contains(i + j * m));
      // every member in the window is an Apery element plus a multiple of m
      for (std::int64_t x = 0; x <= s.frobenius() + 2 * m; ++x)
        EXPECT_EQ(s.contains(x), x >= ap.values[static_cast<std::size_t>(x % m)]);
      EXPECT_EQ(conjugate(ap.counts), height_partition(s, m).b);
    }
  }
}

TEST(SemigroupProperty, CorruptedAperyDetected) {
  const auto s = gens({3, 5});
  auto ap = apery_set(s, 3);
  ap.values[1] = 7;
  EXPECT_FALSE(check_apery_invariants(s, ap).ok);
  ap = apery_set(s, 3);
  ap.values[1] = 13;
  ap.counts[1] = 4;
  EXPECT_FALSE(check_apery_invariants(s, ap).ok);
}
