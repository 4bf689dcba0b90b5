#include <gtest/gtest.h>

#include "gfd/fixtures.hpp"
#include "gfd/io.hpp"

using namespace gfd;

namespace {

std::vector<RingSpec> catalog() {
  return {RingSpec::zmod(4),        RingSpec::zmod(9),
          RingSpec::trunc_poly(2, 2), RingSpec::trunc_poly(3, 3),
          RingSpec::integers(),     RingSpec::zmod(12),
          RingSpec::product({RingSpec::zmod(4), RingSpec::trunc_poly(2, 3)})};
}

template <class F>
auto per_factor(const RingHandle& h, std::uint64_t seed, F&& draw) {
  using T = decltype(draw(std::declval<FixtureGenerator&>()));
  OverRing<T> out{h, {}};
  for (std::size_t i = 0; i < h.factors().size(); ++i) {
    FixtureGenerator gen(h.factors()[i], seed * 31 + i);
    out.parts.push_back(draw(gen));
  }
  return out;
}

json doc(const std::string& ring, const std::string& body) {
  json j = json::parse(body);
  j["version"] = 1;
  j["ring"] = ring_spec_from_name(ring).kind == RingSpec::Kind::integers
                  ? json{{"kind", "Z"}}
                  : ring_spec_to_json(ring_spec_from_name(ring));
  return j;
}

}  // namespace

TEST(RingNames, CompactAndJsonForms) {
  EXPECT_EQ(ring_spec_from_name("Zmod4"), RingSpec::zmod(4));
  EXPECT_EQ(ring_spec_from_name("Zmod(9)"), RingSpec::zmod(9));
  EXPECT_EQ(ring_spec_from_name("Z"), RingSpec::integers());
  EXPECT_EQ(ring_spec_from_name("TruncPoly(2,3)"), RingSpec::trunc_poly(2, 3));
  EXPECT_EQ(ring_spec_from_name("TruncPoly2_3"), RingSpec::trunc_poly(2, 3));
  EXPECT_EQ(ring_spec_from_name("Product(Zmod(4), TruncPoly(2,2))"),
            RingSpec::product({RingSpec::zmod(4), RingSpec::trunc_poly(2, 2)}));
  EXPECT_EQ(ring_spec_from_name(R"({"kind":"Zmod","n":4})"), RingSpec::zmod(4));
  EXPECT_THROW(ring_spec_from_name("Q"), ParseError);
  EXPECT_THROW(ring_spec_from_json(json{{"kind", "Zmod"}, {"n", 4}, {"extra", 1}}), ParseError);
}

TEST(RoundTrip, EveryDocumentType) {
  for (const auto& spec : catalog()) {
    RingHandle h = make_ring(spec);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      auto m = per_factor(h, seed, [](FixtureGenerator& g) { return g.module(0); });
      auto back_m = parse_module_document(json::parse(module_document(m).dump()));
      EXPECT_EQ(back_m.parts, m.parts) << spec.name();

      auto c = per_factor(h, seed, [](FixtureGenerator& g) { return g.complex(); });
      auto back_c = parse_complex_document(json::parse(complex_document(c).dump()));
      EXPECT_EQ(back_c.parts, c.parts) << spec.name();
      EXPECT_EQ(complex_document(back_c).dump(), complex_document(c).dump());

      auto f = per_factor(h, seed, [](FixtureGenerator& g) {
        Complex x = g.complex(), y = g.complex();
        return g.chain_map(x, y);
      });
      auto back_f = parse_chain_map_document(json::parse(chain_map_document(f).dump()));
      EXPECT_EQ(back_f.parts, f.parts) << spec.name();

      auto s = per_factor(h, seed, [](FixtureGenerator& g) { return g.split_ses(); });
      auto back_s = parse_ses_document(json::parse(ses_document(s).dump()));
      for (std::size_t i = 0; i < s.parts.size(); ++i) {
        EXPECT_EQ(back_s.parts[i].i, s.parts[i].i);
        EXPECT_EQ(back_s.parts[i].p, s.parts[i].p);
      }

      auto b = per_factor(h, seed, [](FixtureGenerator& g) {
        Complex x = g.complex();
        return dg_projective_resolution(x, x.hi() + 2);
      });
      auto back_b = parse_bundle_document(json::parse(bundle_document(b).dump()));
      for (std::size_t i = 0; i < b.parts.size(); ++i) {
        EXPECT_EQ(back_b.parts[i].resolution, b.parts[i].resolution);
        EXPECT_EQ(back_b.parts[i].map, b.parts[i].map);
        EXPECT_EQ(back_b.parts[i].valid_through, b.parts[i].valid_through);
        EXPECT_EQ(back_b.parts[i].kernel_profile, b.parts[i].kernel_profile);
        EXPECT_TRUE(back_b.parts[i].verify());
      }
    }
  }
}

TEST(Presentations, ModulesFromMatrices) {
  auto m = parse_module_document(
      doc("Zmod4", R"({"type":"module","presentation":{"rows":1,"cols":1,"entries":[2]}})"));
  EXPECT_EQ(m.parts[0].cardinality(), 2);
  auto f = parse_module_document(
      doc("Z", R"({"type":"module","presentation":{"rows":1,"cols":0,"entries":[]}})"));
  EXPECT_TRUE(f.parts[0].is_free());
  EXPECT_EQ(f.parts[0].free_rank(), 1);
  auto k = parse_module_document(
      doc("TruncPoly(2,2)", R"({"type":"module","presentation":{"rows":1,"cols":1,"entries":[[0,1]]}})"));
  EXPECT_EQ(k.parts[0].cardinality(), 2);
  // CRT: Z/12 with relation 2 is Z/4 / 2 on one factor and zero on the other
  auto crt = parse_module_document(
      doc("Zmod12", R"({"type":"module","presentation":{"rows":1,"cols":1,"entries":[2]}})"));
  ASSERT_EQ(crt.parts.size(), 2u);
  EXPECT_EQ(crt.parts[0].cardinality() * crt.parts[1].cardinality(), 2);
}

TEST(Presentations, DifferentialsInDocumentCoordinates) {
  // Z/4 presented as Z^2 / <(2,1)>: generator e1 is a unit multiple of e2's
  // negative double, so the map Z/4 -> Z/4, e1 |-> e1 is the identity
  auto c = parse_complex_document(doc("Z", R"({"type":"complex","lo":0,
      "modules":[{"presentation":{"rows":2,"cols":1,"entries":[4,0]}},
                 {"presentation":{"rows":2,"cols":1,"entries":[4,0]}}],
      "differentials":[{"rows":2,"cols":2,"entries":[1,0,0,0]}]})"));
  EXPECT_TRUE(c.parts[0].at(0) == c.parts[0].at(1));
  EXPECT_EQ(homology_at(c.parts[0], 0).module.free_rank(), 1);
}

TEST(Validation, StrictDocuments) {
  // d_0 d_1 != 0 over Z/4: Z/4 --2--> Z/4 --2--> Z/4 is fine, but 1 then 2 is not
  json bad = doc("Zmod4", R"({"type":"complex","lo":0,
      "modules":[{"orders":[0]},{"orders":[0]},{"orders":[0]}],
      "differentials":[{"rows":1,"cols":1,"entries":[1]},{"rows":1,"cols":1,"entries":[2]}]})");
  try {
    parse_complex_document(bad);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("NotAComplex at degree"), std::string::npos);
  }
  json extra = doc("Zmod4", R"({"type":"module","orders":[2],"colour":"red"})");
  EXPECT_THROW(parse_module_document(extra), ParseError);
  json no_version = doc("Zmod4", R"({"type":"module","orders":[2]})");
  no_version.erase("version");
  EXPECT_THROW(parse_module_document(no_version), ParseError);
  // Z/2 -> Z/4, 1 |-> 1 does not respect the relation 2 = 0
  json ill = doc("Zmod4", R"({"type":"complex","lo":0,"modules":[{"orders":[0]},{"orders":[2]}],
      "differentials":[{"rows":1,"cols":1,"entries":[1]}]})");
  EXPECT_THROW(parse_complex_document(ill), ValidationError);
  json shape = doc("Zmod4", R"({"type":"complex","lo":0,"modules":[{"orders":[0]},{"orders":[0]}],
      "differentials":[{"rows":1,"cols":2,"entries":[1,1]}]})");
  EXPECT_THROW(parse_complex_document(shape), ValidationError);
  json product = doc("Product(Zmod4,Z)", R"({"type":"module","orders":[2]})");
  EXPECT_THROW(parse_module_document(product), ParseError);
  EXPECT_THROW(parse_module_document(json::parse(R"({"version":1,"type":"complex"})")), ParseError);
}

TEST(Reports, FlatRecords) {
  Ring r = Ring::zmod(2, 2);
  DimensionReport d = dimension_of_complex(residue_field_at_zero(r), DimKind::fd);
  json j = dimension_report_to_json(d);
  EXPECT_EQ(j.at("kind"), "fd");
  EXPECT_EQ(j.at("value"), "inf");
  EXPECT_FALSE(j.at("certificates").empty());
  CohomologyTable t = ext_groups(residue_field_at_zero(r), residue_field_at_zero(r), 0, 2, Theory::abs);
  json tj = table_to_json(t);
  EXPECT_EQ(tj.at("groups").size(), 3u);
  EXPECT_EQ(tj.at("groups")[1], json::array({2}));
}
