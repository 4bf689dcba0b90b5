#include <gfd/dimension.hpp>
#include <gfd/fixtures.hpp>
#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace gfd;

namespace {

const Ring kZ = Ring::integers();
const Ring kZ4 = Ring::zmod(2, 2);

std::vector<Ring> finite_rings() {
  return {Ring::zmod(2, 2), Ring::zmod(3, 2), Ring::trunc_poly(2, 2), Ring::trunc_poly(2, 3)};
}

// sup H by counting elements of every homology group
ExtInt enumerated_sup_h(const Complex& c) {
  Complex t = c.trimmed();
  if (t.empty()) return ExtInt::neg_inf();
  for (int n = t.hi(); n >= t.lo(); --n)
    if (oracle::homology_size(t, n) > 1) return n;
  return ExtInt::neg_inf();
}

}  // namespace

TEST(Dimension, TwoTermMultiplicationOverIntegers) {
  Complex d = two_term_multiplication(kZ);
  DimensionReport fd = dimension_of_complex(d, DimKind::fd);
  DimensionReport gfd = dimension_of_complex(d, DimKind::gfd);
  EXPECT_EQ(fd.value, ExtInt(1));
  EXPECT_EQ(gfd.value, ExtInt(1));
  EXPECT_TRUE(fd.consistent());
  EXPECT_TRUE(gfd.consistent());
  EXPECT_EQ(dimension_of_complex(d, DimKind::gpd).value, ExtInt(1));
  EXPECT_THROW(dimension_of_complex(d, DimKind::gid), UnsupportedRing);
}

TEST(Dimension, ResidueFieldOverZmod4) {
  Complex k = residue_field_at_zero(kZ4);
  DimensionReport gfd = dimension_of_complex(k, DimKind::gfd);
  DimensionReport fd = dimension_of_complex(k, DimKind::fd);
  EXPECT_EQ(gfd.value, ExtInt(0));
  EXPECT_TRUE(fd.value.is_pos_inf());
  EXPECT_TRUE(fd.consistent());
  ASSERT_FALSE(fd.certificates.empty());
  EXPECT_NE(fd.certificates.front().find("agree up to free summands"), std::string::npos);
  EXPECT_EQ(dimension_of_complex(k, DimKind::gpd).value, ExtInt(0));
  EXPECT_EQ(dimension_of_complex(k, DimKind::gid).value, ExtInt(0));
}

TEST(Dimension, ExactComplexesAreMinusInfinity) {
  for (const Ring& r : finite_rings()) {
    FixtureGenerator gen(r, 4);
    for (int t = 0; t < 5; ++t) {
      Complex e = gen.exact_complex();
      for (DimKind k : {DimKind::fd, DimKind::gfd, DimKind::gpd, DimKind::gid})
        EXPECT_TRUE(dimension_of_complex(e, k).value.is_neg_inf()) << to_string(k);
    }
  }
}

TEST(Dimension, GfdOverQuasiFrobeniusIsSupH) {
  for (const Ring& r : finite_rings()) {
    FixtureGenerator gen(r, 12);
    for (int t = 0; t < 8; ++t) {
      Complex c = gen.complex();
      DimensionReport g = dimension_of_complex(c, DimKind::gfd);
      EXPECT_EQ(g.value, enumerated_sup_h(c)) << r.name() << "\n" << c.to_string();
      EXPECT_TRUE(g.consistent());
    }
  }
}

TEST(Dimension, DualityOnFiniteRings) {
  for (const Ring& r : finite_rings()) {
    FixtureGenerator gen(r, 27);
    for (int t = 0; t < 6; ++t) {
      Complex c = gen.complex();
      EXPECT_EQ(dimension_of_complex(c, DimKind::gfd).value,
                dimension_of_complex(dual_complex(c), DimKind::gid).value);
    }
  }
}

TEST(Dimension, TwoOfThreeNeverFiniteFiniteInfinite) {
  for (const Ring& r : {Ring::zmod(2, 2), Ring::trunc_poly(2, 2), kZ}) {
    FixtureGenerator gen(r, 51);
    for (int t = 0; t < 5; ++t) {
      ShortExactSequence ses = gen.split_ses();
      int finite = 0;
      for (const Complex* c : {&ses.i.source(), &ses.i.target(), &ses.p.target()})
        if (!dimension_of_complex(*c, DimKind::gfd).value.is_pos_inf()) ++finite;
      EXPECT_NE(finite, 2);
    }
  }
}

TEST(Dimension, TruncatedWitnessRealizesGfd) {
  for (const Ring& r : {Ring::zmod(3, 2), Ring::trunc_poly(2, 3), kZ}) {
    FixtureGenerator gen(r, 60);
    for (int t = 0; t < 5; ++t) {
      Complex c = gen.nonexact_complex();
      DimensionReport g = dimension_of_complex(c, DimKind::gfd);
      ASSERT_TRUE(g.g.has_value());
      ResolutionBundle p = dg_projective_resolution(c, *g.g + 2);
      Complex w = truncate(p.resolution, Truncation::soft_above, *g.g);
      EXPECT_TRUE(class_membership(w.at(*g.g), ClassName::gorenstein_flat));
      // the witness is quasi-isomorphic to P, hence to c
      ChainMapAnalysis a = analyze_chain_map(soft_truncation_map(p.resolution, *g.g), std::nullopt, *g.g);
      EXPECT_TRUE(a.is_quasi_iso);
      // and no lower top degree works: C_{g-1} is not Gorenstein flat or g = sup H
      if (*g.g > sup_h(c).value())
        EXPECT_FALSE(class_membership(boundary_cokernel(p.resolution, *g.g - 1), ClassName::gorenstein_flat));
    }
  }
}

TEST(ComplexProjectiveDimension, ZeroOrInfiniteForGpComplexes) {
  for (const Ring& r : finite_rings()) {
    FixtureGenerator gen(r, 88);
    for (int t = 0; t < 10; ++t) {
      ExtInt pd = complex_projective_dimension(gen.complex());
      EXPECT_TRUE(pd.is_pos_inf() || pd == ExtInt(0) || pd.is_neg_inf()) << pd.to_string();
    }
  }
}

TEST(DimensionSuite, Examples) {
  DimensionSuite k = dimension_report_suite(residue_field_at_zero(kZ4));
  EXPECT_TRUE(k.all_hold());
  DimensionSuite d = dimension_report_suite(two_term_multiplication(kZ));
  EXPECT_TRUE(d.all_hold());
  for (const auto& v : d.verdicts) EXPECT_TRUE(v.holds) << v.name << ": " << v.detail;
  DimensionSuite m = dimension_report_suite(Complex::concentrated(Module::cyclic(kZ, 2), 2));
  EXPECT_TRUE(m.all_hold());
  EXPECT_EQ(m.find(DimKind::gfd)->value, ExtInt(3));
}

TEST(DimensionSuite, RandomComplexes) {
  for (const Ring& r : {Ring::zmod(2, 2), Ring::trunc_poly(2, 2), kZ}) {
    FixtureGenerator gen(r, 9);
    for (int t = 0; t < 6; ++t) {
      DimensionSuite s = dimension_report_suite(gen.complex());
      for (const auto& v : s.verdicts) EXPECT_TRUE(v.holds) << r.name() << " " << v.name << ": " << v.detail;
    }
  }
}
