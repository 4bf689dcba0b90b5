#include <gfd/errors.hpp>
#include <gfd/ring.hpp>
#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace gfd;

TEST(RingCatalog, ZmodFourIsQuasiFrobenius) {
  auto r = make_ring(RingSpec::zmod(4));
  EXPECT_EQ(r.profile().self_injective_dim, 0);
  EXPECT_TRUE(r.profile().is_quasi_frobenius);
  EXPECT_TRUE(r.profile().is_finite);
  EXPECT_TRUE(r.profile().is_coherent);
  EXPECT_TRUE(r.profile().is_gf_closed);
}

TEST(RingCatalog, IntegersAreOneGorenstein) {
  auto r = make_ring(RingSpec::integers());
  EXPECT_EQ(ring_profile(r).self_injective_dim, 1);
  EXPECT_FALSE(ring_profile(r).is_quasi_frobenius);
  EXPECT_FALSE(ring_profile(r).is_finite);
}

TEST(RingCatalog, ZmodTwelveSplitsIntoChainFactors) {
  auto r = make_ring(RingSpec::zmod(12));
  ASSERT_EQ(r.factors().size(), 2u);
  EXPECT_EQ(r.factors()[0], Ring::zmod(2, 2));
  EXPECT_EQ(r.factors()[1], Ring::zmod(3, 1));
  std::int64_t prod = 1;
  for (const auto& f : r.factors()) prod *= f.size();
  EXPECT_EQ(prod, 12);
}

TEST(RingCatalog, TruncPolyProfile) {
  auto r = make_ring(RingSpec::trunc_poly(2, 3));
  EXPECT_EQ(ring_profile(r).self_injective_dim, 0);
  EXPECT_EQ(r.factors().front().size(), 8);
}

TEST(RingCatalog, ProductOfQuasiFrobeniusRings) {
  auto r = make_ring(RingSpec::product({RingSpec::zmod(4), RingSpec::trunc_poly(2, 2)}));
  EXPECT_TRUE(ring_profile(r).is_quasi_frobenius);
  EXPECT_EQ(ring_profile(r).self_injective_dim, 0);
  auto mixed = make_ring(RingSpec::product({RingSpec::zmod(4), RingSpec::integers()}));
  EXPECT_FALSE(ring_profile(mixed).is_quasi_frobenius);
  EXPECT_EQ(ring_profile(mixed).self_injective_dim, 1);
}

TEST(RingCatalog, ProductFlatteningIsIdempotent) {
  auto a = RingSpec::zmod(4), b = RingSpec::trunc_poly(3, 2), c = RingSpec::integers();
  auto nested = make_ring(RingSpec::product({RingSpec::product({a, b}), c}));
  auto flat = make_ring(RingSpec::product({a, b, c}));
  EXPECT_EQ(nested.spec(), flat.spec());
  EXPECT_EQ(make_ring(nested.spec()).spec(), nested.spec());
  EXPECT_EQ(nested.factors().size(), 3u);
}

TEST(RingCatalog, RejectsBadDescriptions) {
  EXPECT_THROW(make_ring(RingSpec::trunc_poly(4, 2)), NonPrimeBase);
  EXPECT_THROW(make_ring(RingSpec::zmod(1)), BadModulus);
  EXPECT_THROW(make_ring(RingSpec::zmod(0)), BadModulus);
  EXPECT_THROW(make_ring(RingSpec::trunc_poly(2, 0)), BadModulus);
}

class ChainRingArithmetic : public ::testing::TestWithParam<Ring> {};

TEST_P(ChainRingArithmetic, AxiomsByEnumeration) {
  const Ring& r = GetParam();
  auto els = oracle::elements(r);
  for (Elem a : els)
    for (Elem b : els) {
      EXPECT_EQ(r.add(a, b), r.add(b, a));
      EXPECT_EQ(r.mul(a, b), r.mul(b, a));
      EXPECT_EQ(r.sub(r.add(a, b), b), a);
      for (Elem c : els) {
        ASSERT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        ASSERT_EQ(r.mul(a, r.mul(b, c)), r.mul(r.mul(a, b), c));
      }
    }
}

TEST_P(ChainRingArithmetic, UnitsAndValuations) {
  const Ring& r = GetParam();
  for (Elem a : oracle::elements(r)) {
    // brute-force unit test: a has an inverse among the elements
    bool unit = false;
    for (Elem b : oracle::elements(r)) unit = unit || r.mul(a, b) == 1;
    EXPECT_EQ(unit, r.is_unit(a)) << r.format(a);
    if (unit) {
      EXPECT_EQ(r.mul(a, r.inverse(a)), 1);
    }
    auto [canon, u] = r.associate(a);
    EXPECT_TRUE(r.is_unit(u));
    EXPECT_EQ(r.mul(canon, u), a);
    // the ideal generated by a has p^(k - v) elements
    std::set<Elem> ideal;
    for (Elem b : oracle::elements(r)) ideal.insert(r.mul(a, b));
    std::size_t expected = 1;
    for (int t = 0; t < r.length() - r.valuation(a); ++t) expected *= r.prime();
    EXPECT_EQ(ideal.size(), expected);
  }
}

TEST_P(ChainRingArithmetic, DivisionAndHomCyclicAgreeWithEnumeration) {
  const Ring& r = GetParam();
  auto els = oracle::elements(r);
  for (Elem a : els)
    for (Elem d : els) {
      bool brute = false;
      for (Elem q : els) brute = brute || r.mul(q, d) == a;
      ASSERT_EQ(brute, r.divides(d, a));
      if (brute) EXPECT_EQ(r.mul(r.exact_div(a, d), d), a);
    }
  // |Hom(R/(a), R/(b))| = number of x in R/(b) with a x = 0
  for (Elem a : els)
    for (Elem b : els) {
      Elem ca = r.canonical(a), cb = r.canonical(b);
      std::set<Elem> reps;
      for (Elem x : els) reps.insert(r.reduce_mod(x, cb));
      std::size_t count = 0;
      for (Elem x : reps) count += r.reduce_mod(r.mul(ca, x), cb) == 0;
      auto [gen, order] = r.hom_cyclic(ca, cb);
      std::size_t predicted = 1;
      for (int t = 0; t < r.valuation(order); ++t) predicted *= r.prime();
      if (r.is_unit(order)) predicted = 1;
      EXPECT_EQ(count, predicted) << r.format(a) << " " << r.format(b);
    }
}

INSTANTIATE_TEST_SUITE_P(Catalog, ChainRingArithmetic,
                         ::testing::Values(Ring::zmod(2, 2), Ring::zmod(3, 2), Ring::zmod(2, 3),
                                           Ring::trunc_poly(2, 2), Ring::trunc_poly(2, 3),
                                           Ring::trunc_poly(3, 3), Ring::trunc_poly(5, 1)),
                         oracle::RingName());

TEST(IntegerArithmetic, OverflowIsReported) {
  Ring z = Ring::integers();
  EXPECT_THROW(z.mul(INT64_MAX / 2, 3), ArithmeticOverflow);
  EXPECT_THROW(z.add(INT64_MAX, 1), ArithmeticOverflow);
  EXPECT_EQ(z.gcd(-12, 18), 6);
  auto b = z.bezout(12, 18);
  EXPECT_EQ(b.g, 6);
  EXPECT_EQ(12 * b.s + 18 * b.t, 6);
  EXPECT_EQ(z.reduce_mod(-7, 3), 2);
  EXPECT_EQ(z.annihilator(5), 0);
  EXPECT_EQ(z.annihilator(0), 1);
}

TEST(TruncPolyFormatting, CoefficientRoundTrip) {
  Ring r = Ring::trunc_poly(3, 3);
  for (Elem a : oracle::elements(r)) EXPECT_EQ(r.from_coefficients(r.coefficients(a)), a);
  EXPECT_EQ(r.format(r.from_coefficients({1, 0, 2})), "1+2x^2");
}
