#include "gfd/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "gfd/cohomology.hpp"
#include "gfd/dimension.hpp"
#include "gfd/errors.hpp"
#include "gfd/fixtures.hpp"

namespace gfd {

namespace {

constexpr std::size_t kKeptFailures = 12;

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checked;
    if (ok) return;
    ++r_.failed;
    if (r_.failures.size() < kKeptFailures) r_.failures.push_back(what);
  }
  // An unexpected error inside one instance fails that instance only.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      check(false, what + ": " + e.name() + ": " + e.what());
    }
  }
  void note(const std::string& s) { r_.notes.push_back(s); }

 private:
  SuiteResult& r_;
};

std::uint64_t mix(std::uint64_t seed, std::size_t ring_index, std::uint64_t salt) {
  std::uint64_t x = seed * 0x9E3779B97F4A7C15ull + ring_index * 0xBF58476D1CE4E5B9ull + salt;
  x ^= x >> 31;
  return x;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string tag(const Ring& r, int instance) { return r.name() + " #" + std::to_string(instance); }

Ring zmod4() { return Ring::zmod(2, 2); }
Ring zmod9() { return Ring::zmod(3, 2); }
Ring tp22() { return Ring::trunc_poly(2, 2); }
Ring tp23() { return Ring::trunc_poly(2, 3); }
Ring tp33() { return Ring::trunc_poly(3, 3); }

using SuiteBody = std::function<void(Recorder&, const Ring&, std::uint64_t)>;

// -------------------------------------------------------------- dimensions

void resolution_independence(Recorder& rec, const Ring& r, std::uint64_t seed) {
  FixtureGenerator gen(r, seed);
  for (int t = 0; t < 50; ++t) {
    Complex c = gen.complex();
    rec.guarded(tag(r, t), [&] {
      DimensionReport d = dimension_of_complex(c, DimKind::gfd, seed + t);
      rec.check(d.consistent(), tag(r, t) + ": gfd " + d.value.to_string() +
                                    " from the minimal resolution, " +
                                    d.cross_check.to_string() + " from the padded one");
    });
  }
}

void flat_dimension_bound(Recorder& rec, const Ring& r, std::uint64_t seed) {
  FixtureGenerator gen(r, seed);
  for (int t = 0; t < 25; ++t) {
    Complex c = gen.complex();
    rec.guarded(tag(r, t), [&] {
      ExtInt g = dimension_of_complex(c, DimKind::gfd, seed).value;
      ExtInt f = dimension_of_complex(c, DimKind::fd, seed).value;
      rec.check(g <= f, tag(r, t) + ": gfd " + g.to_string() + " > fd " + f.to_string());
      if (!f.is_pos_inf())
        rec.check(g == f, tag(r, t) + ": fd finite (" + f.to_string() + ") but gfd " + g.to_string());
    });
  }
  if (r.is_finite()) {
    Complex k = residue_field_at_zero(r);
    ExtInt g = dimension_of_complex(k, DimKind::gfd).value;
    ExtInt f = dimension_of_complex(k, DimKind::fd).value;
    rec.check(g == ExtInt(0) && f.is_pos_inf(),
              r.name() + ": residue field at 0 has gfd " + g.to_string() + ", fd " + f.to_string());
  }
}

void character_duality(Recorder& rec, const Ring& r, std::uint64_t seed) {
  FixtureGenerator gen(r, seed);
  for (int t = 0; t < 50; ++t) {
    Complex c = gen.complex();
    rec.guarded(tag(r, t), [&] {
      ExtInt g = dimension_of_complex(c, DimKind::gfd, seed).value;
      ExtInt i = dimension_of_complex(dual_complex(c), DimKind::gid, seed).value;
      rec.check(g == i, tag(r, t) + ": gfd " + g.to_string() + " but gid of the dual " + i.to_string());
    });
  }
}

void exactness_witness(Recorder& rec, const Ring& r, std::uint64_t seed) {
  FixtureGenerator gen(r, seed);
  for (int t = 0; t < 25; ++t) {
    Complex e = gen.exact_complex(), n = gen.nonexact_complex();
    rec.guarded(tag(r, t), [&] {
      ExtInt ge = dimension_of_complex(e, DimKind::gfd, seed).value;
      ExtInt gn = dimension_of_complex(n, DimKind::gfd, seed).value;
      rec.check(ge.is_neg_inf(), tag(r, t) + ": exact complex has gfd " + ge.to_string());
      rec.check(!gn.is_neg_inf(), tag(r, t) + ": non-exact complex has gfd -inf");
    });
  }
}

void gorenstein_bound(Recorder& rec, const Ring& r, std::uint64_t seed) {
  int n = factor_profile(r).self_injective_dim;
  FixtureGenerator gen(r, seed);
  for (int t = 0; t < 25; ++t) {
    Complex c = gen.nonexact_complex();
    rec.guarded(tag(r, t), [&] {
      ExtInt g = dimension_of_complex(c, DimKind::gfd, seed).value;
      ExtInt s = sup_h(c);
      rec.check(g <= s + n, tag(r, t) + ": gfd " + g.to_string() + " exceeds " +
                                std::to_string(n) + " + sup H = " + (s + n).to_string());
      if (n == 0) rec.check(g == s, tag(r, t) + ": gfd " + g.to_string() + " but sup H " + s.to_string());
    });
  }
  if (n > 0) {
    Complex d = two_term_multiplication(r);
    ExtInt g = dimension_of_complex(d, DimKind::gfd).value;
    rec.check(g == sup_h(d) + n, r.name() + ": D attains gfd " + g.to_string() +
                                     ", expected " + (sup_h(d) + n).to_string());
  }
}

// ------------------------------------------------------- complex identities

void tensor_hom_duality(Recorder& rec, const Ring& r, std::uint64_t seed) {
  FixtureGenerator gen(r, seed);
  for (int t = 0; t < 25; ++t) {
    Complex e = gen.complex(), f = gen.complex();
    rec.guarded(tag(r, t), [&] {
      Complex lhs = dual_complex(TensorComplex(e, f).complex());
      Complex rhs = HomComplex(e, dual_complex(f)).complex();
      int lo = std::min(lhs.lo(), rhs.lo()), hi = std::max(lhs.hi(), rhs.hi());
      bool ok = true;
      for (int d = lo; d <= hi; ++d)
        ok = ok && is_isomorphic(lhs.at(d), rhs.at(d)) &&
             is_isomorphic(homology_at(lhs, d).module, homology_at(rhs, d).module);
      rec.check(ok, tag(r, t) + ": (E (x) F)^+ and Hom(E, F^+) differ");
    });
  }
}

// -------------------------------------------------------------- cohomology

void relative_absolute_sequence(Recorder& rec, const Ring& r, std::uint64_t seed) {
  FixtureGenerator gen(r, seed);
  int count = r.is_finite() ? 25 : 10;
  for (int t = 0; t < count; ++t) {
    Complex m = gen.complex(), n = gen.complex();
    rec.guarded(tag(r, t), [&] {
      LongExactSequenceReport rep = am_sequence(m, n, 0, 6);
      rec.check(rep.checked() == 21 && rep.exact(),
                tag(r, t) + ": " + std::to_string(rep.failures()) + " of " +
                    std::to_string(rep.checked()) + " positions not exact");
      if (r.is_finite()) return;
      // over the integers every GP module is projective: Ext_G = Ext_R, bar = 0
      const CohomologyTable &gor = rep.tables[0], &abs = rep.tables[1], &bar = rep.tables[2];
      bool collapse = true;
      for (int j = 0; j <= 6; ++j)
        collapse = collapse && is_isomorphic(gor.at(j), abs.at(j)) && bar.at(j).is_zero();
      rec.check(collapse, tag(r, t) + ": no collapse to Ext_G = Ext_R with bar = 0");
    });
  }
}

void cone_well_defined(Recorder& rec, const Ring& r, std::uint64_t seed) {
  FixtureGenerator gen(r, seed);
  for (int t = 0; t < 10; ++t) {
    Complex m = gen.complex(), n = gen.complex();
    rec.guarded(tag(r, t), [&] {
      ConeIndependence ci = cone_independence(m, n, 0, 3, seed + t);
      rec.check(ci.omega_psi_inverse, tag(r, t) + ": omega and psi are not inverse");
      rec.check(ci.lift_tables_agree, tag(r, t) + ": tables from two lifts differ");
      rec.check(ci.ab_homotopic && ci.ba_homotopic,
                tag(r, t) + ": comparison maps are not homotopy inverse");
      rec.check(ci.resolution_tables_agree, tag(r, t) + ": tables from two resolutions differ");
    });
  }
}

void bar_meets_tate(Recorder& rec, const Ring& r, std::uint64_t seed) {
  // the claim is for M supported in degrees 0..n and N a module
  FixtureGenerator gen(r, seed);
  for (int top = 0; top <= 2; ++top) {
    for (int t = 0; t < 5; ++t) {
      Complex c = gen.complex();
      Complex m = truncate(shift(c, top - c.hi()), Truncation::hard_below, 0);
      Complex n = Complex::concentrated(gen.module(), 0);
      rec.guarded(tag(r, t) + " top " + std::to_string(top), [&] {
        for (const auto& cmp : compare_bar_tate(m, n, top + 1, top + 5))
          rec.check(cmp.isomorphic, tag(r, t) + " top " + std::to_string(top) + ": degree " +
                                        std::to_string(cmp.degree) + " bar " +
                                        cmp.bar.to_string() + " vs tate " + cmp.tate.to_string());
      });
    }
  }
  if (r.is_finite()) {
    Complex k = residue_field_at_zero(r);
    CohomologyTable tate = ext_groups(k, k, 1, 5, Theory::tate);
    bool all = true;
    for (int j = 1; j <= 5; ++j) all = all && is_isomorphic(tate.at(j), Module::cyclic(r, r.prime()));
    rec.check(all, r.name() + ": Tate column of the residue field is not k in every degree");
  }
}

void horseshoe_suite(Recorder& rec, const Ring& r, std::uint64_t seed) {
  FixtureGenerator gen(r, seed);
  for (int t = 0; t < 8; ++t) {
    ShortExactSequence ses = gen.split_ses(true);
    Complex n = gen.complex();
    rec.guarded(tag(r, t), [&] {
      HorseshoeResult h = horseshoe(ses, HorseshoeFlavor::gp);
      // zero kernels report -inf
      bool finite = true;
      for (const auto& [d, v] : h.middle.kernel_profile) finite = finite && !v.is_pos_inf();
      rec.check(h.middle.verify() && h.kernels.verify() && finite,
                tag(r, t) + ": middle precover not certified with finite-pd kernels");
      for (Theory th : {Theory::gor, Theory::bar}) {
        LongExactSequenceReport rep = les_first_variable(ses, n, 0, 4, th);
        rec.check(rep.checked() == 15 && rep.exact(),
                  tag(r, t) + ": " + to_string(th) + " sequence has " +
                      std::to_string(rep.failures()) + " inexact positions");
      }
    });
  }
}

void collapse(Recorder& rec, const Ring& r, std::uint64_t seed) {
  FixtureGenerator gen(r, seed);
  for (int t = 0; t < 25; ++t) {
    Module m = gen.module(), n = gen.module();
    rec.guarded(tag(r, t), [&] {
      Complex mc = Complex::concentrated(m, 0), nc = Complex::concentrated(n, 0);
      CohomologyTable gor = ext_groups(mc, nc, 0, 3, Theory::gor);
      CohomologyTable tate = ext_groups(mc, nc, -2, 3, Theory::tate);
      for (int j = 0; j <= 3; ++j)
        rec.check(is_isomorphic(gor.at(j), module_gorenstein_ext(m, n, j)),
                  tag(r, t) + ": Ext_G^" + std::to_string(j) + " differs from the module value");
      for (int j = -2; j <= 3; ++j)
        rec.check(is_isomorphic(tate.at(j), module_tate_ext(m, n, j)),
                  tag(r, t) + ": Tate^" + std::to_string(j) + " differs from the module value");
      ExtInt g = dimension_of_complex(mc, DimKind::gfd, seed).value;
      ExtInt gm = module_dimension(m, DimKind::gfd).value;
      rec.check(g == gm, tag(r, t) + ": gfd " + g.to_string() + " vs module " + gm.to_string());
    });
  }
}

struct SuiteDef {
  std::string claim;
  SuiteBody body;
  std::vector<Ring> rings;
  bool finite_only = false;
};

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> defs = [] {
    std::vector<Ring> catalog = {zmod4(), zmod9(), tp22(), tp33(), Ring::integers()};
    std::vector<Ring> finite = {zmod4(), zmod9(), tp22(), tp33()};
    std::map<std::string, SuiteDef> d;
    d["theorem1"] = {"gfd is independent of the DG-projective resolution", resolution_independence, catalog};
    d["prop-fd"] = {"gfd <= fd, with equality when fd is finite", flat_dimension_bound, catalog};
    d["prop-dual"] = {"gfd N = gid N^+", character_duality, finite, true};
    d["remark2"] = {"gfd N = -inf exactly when N is exact", exactness_witness, catalog};
    d["theorem2"] = {"gfd N <= n + sup H(N) over n-Gorenstein rings", gorenstein_bound, catalog};
    d["remark1"] = {"(E (x) F)^+ = Hom(E, F^+) degreewise", tensor_hom_duality, finite, true};
    d["am"] = {"Ext_G -> Ext_R -> bar -> Ext_G is exact", relative_absolute_sequence, {zmod4(), tp22(), Ring::integers()}};
    d["conewd"] = {"bar is independent of the lift and the resolution", cone_well_defined, catalog};
    d["prop9"] = {"bar^j = Tate^j above the top degree", bar_meets_tate, {zmod4(), tp23()}};
    d["horseshoe"] = {"horseshoe precovers and first-variable long exact sequences", horseshoe_suite,
                      {zmod4(), tp22(), Ring::integers()}};
    d["collapse"] = {"module-at-0 pipelines agree with module-level values", collapse, finite, true};
    return d;
  }();
  return defs;
}

const SuiteDef& find_suite(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw ValidationError("unknown suite \"" + name + "\"");
  return it->second;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theorem1", "prop-fd",  "prop-dual", "remark2",
                                                 "theorem2", "remark1",  "am",        "conewd",
                                                 "prop9",    "horseshoe", "collapse"};
  return names;
}

std::string suite_claim(const std::string& name) { return find_suite(name).claim; }

std::vector<Ring> default_suite_rings(const std::string& name) { return find_suite(name).rings; }

SuiteResult run_suite(const std::string& name, std::uint64_t seed, const std::vector<Ring>& rings) {
  const SuiteDef& def = find_suite(name);
  SuiteResult res;
  res.name = name;
  res.claim = def.claim;
  res.seed = seed;
  Recorder rec(res);
  auto start = std::chrono::steady_clock::now();
  const std::vector<Ring>& use = rings.empty() ? def.rings : rings;
  for (std::size_t i = 0; i < use.size(); ++i) {
    const Ring& r = use[i];
    if (def.finite_only && !r.is_finite()) {
      rec.note(r.name() + " skipped: the suite needs a finite ring");
      continue;
    }
    res.rings.push_back(r.name());
    def.body(rec, r, mix(seed, i, fnv1a(name)));
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace gfd
