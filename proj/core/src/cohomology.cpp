#include "gfd/cohomology.hpp"

#include <algorithm>
#include <array>

namespace gfd {

namespace {

int top_degree(const Complex& c, int fallback) {
  Complex t = c.trimmed();
  return t.empty() ? fallback : t.hi();
}

int bottom_degree(const Complex& c, int fallback) {
  Complex t = c.trimmed();
  return t.empty() ? fallback : t.lo();
}

// Relabels a homology sequence of Hom complexes in cohomological indexing and
// keeps only the verdicts at positions whose index lies in [lo, hi].
// names[k] labels slot k (A, B, C) and shifts[k] is added to its index.
SequenceReport cohomological(SequenceReport rep, int top_hom_degree,
                             const std::array<std::string, 3>& names, const std::array<int, 3>& shifts,
                             int lo, int hi) {
  for (std::size_t k = 0; k < rep.objects.size(); ++k) {
    int n = -(top_hom_degree - static_cast<int>(k / 3)) + shifts[k % 3];
    rep.labels[k] = names[k % 3] + "^" + std::to_string(n);
    if (n < lo || n > hi) rep.exact[k] = std::nullopt;
  }
  return rep;
}

CohomologyTable table_from_sequence(const SequenceReport& rep, int top_hom_degree, int slot, int shift,
                                    Theory t, int lo, int hi) {
  CohomologyTable tab;
  tab.theory = t;
  tab.lo = lo;
  tab.hi = hi;
  for (std::size_t k = static_cast<std::size_t>(slot); k < rep.objects.size(); k += 3) {
    int n = -(top_hom_degree - static_cast<int>(k / 3)) + shift;
    if (n >= lo && n <= hi) tab.groups[n] = rep.objects[k];
  }
  return tab;
}

ShortExactSequence hom_sequence(const Complex& a, const Complex& b, const Complex& c, const Complex& n,
                                const ChainMap& into_b, const ChainMap& out_of_b) {
  // 0 -> A -> B -> C -> 0 becomes 0 -> Hom(C, N) -> Hom(B, N) -> Hom(A, N) -> 0
  HomComplex hc(c, n), hb(b, n), ha(a, n);
  ShortExactSequence ses{hom_precompose(hc, hb, out_of_b), hom_precompose(hb, ha, into_b)};
  if (!ses.verify()) throw ValidationError("Hom sequence is not degreewise exact");
  return ses;
}

Elem pi_power(const Ring& r, int e) {
  if (e >= r.length()) return 0;
  Elem out = 1;
  for (int i = 0; i < e; ++i) out *= r.prime();
  return out;
}

Module hom_homology(const Module& before, const Module& here, const Module& after, const Morphism& d_in,
                    const Morphism& d_out, const Module& n) {
  // H at Hom(here, N) of Hom(before, N) -> Hom(here, N) -> Hom(after, N)
  HomSpace hb(before, n), hh(here, n), ha(after, n);
  return homology(precompose_map(hb, hh, d_in), precompose_map(hh, ha, d_out)).module;
}

}  // namespace

std::string to_string(Theory t) {
  switch (t) {
    case Theory::abs: return "abs";
    case Theory::gor: return "gor";
    case Theory::bar: return "bar";
    case Theory::tate: return "tate";
  }
  return "?";
}

Theory theory_from_string(const std::string& s) {
  for (Theory t : {Theory::abs, Theory::gor, Theory::bar, Theory::tate})
    if (to_string(t) == s) return t;
  throw ParseError("unknown theory '" + s + "'");
}

const Module& CohomologyTable::at(int n) const {
  auto it = groups.find(n);
  if (it == groups.end()) throw ValidationError("degree " + std::to_string(n) + " outside the table");
  return it->second;
}

bool CohomologyTable::isomorphic_to(const CohomologyTable& o) const {
  if (lo != o.lo || hi != o.hi) return false;
  for (int n = lo; n <= hi; ++n)
    if (!is_isomorphic(at(n), o.at(n))) return false;
  return true;
}

int resolution_top(const Complex& m, const Complex& n, int hi) {
  return std::max(top_degree(m, 0) + 2, top_degree(n, 0) + hi + 4);
}

ConeData cone_data(const Complex& m, int top, const CohomologyOptions& opt) {
  ConeData d;
  d.P = dg_projective_resolution(m, top, opt.route, opt.seed);
  d.G = special_gp_precover(m, opt.policy);
  std::mt19937_64 rng(opt.seed);
  d.u = lift_through_precover(d.P.map, d.G, opt.random_lift ? &rng : nullptr);
  d.cone = mapping_cone(d.u);
  return d;
}

CohomologyTable table_of(const Complex& hom, Theory t, int lo, int hi) {
  CohomologyTable tab;
  tab.theory = t;
  tab.lo = lo;
  tab.hi = hi;
  for (int n = lo; n <= hi; ++n) tab.groups[n] = homology_at(hom, -n).module;
  return tab;
}

CohomologyTable ext_groups(const Complex& m, const Complex& n, int lo, int hi, Theory t,
                           const CohomologyOptions& opt) {
  if (m.ring() != n.ring()) throw RingMismatch("Ext of complexes over different rings");
  int top = resolution_top(m, n, hi);
  CohomologyTable tab;
  switch (t) {
    case Theory::abs: {
      ResolutionBundle p = dg_projective_resolution(m, top, opt.route, opt.seed);
      tab = table_of(HomComplex(p.resolution, n).complex(), t, lo, hi);
      tab.provenance.push_back("Hom(P, N), P DG-projective through degree " + std::to_string(top));
      break;
    }
    case Theory::gor: {
      ResolutionBundle g = special_gp_precover(m, opt.policy);
      tab = table_of(HomComplex(g.resolution, n).complex(), t, lo, hi);
      tab.provenance.push_back("Hom(G, N), G special Gorenstein projective precover (" +
                               to_string(opt.policy) + ")");
      break;
    }
    case Theory::bar: {
      ConeData d = cone_data(m, top, opt);
      tab = table_of(HomComplex(d.cone.complex, n).complex(), t, lo, hi);
      tab.provenance.push_back("Hom(M(u), N), u: P -> G lifted through the precover (" +
                               to_string(opt.policy) + ")");
      break;
    }
    case Theory::tate: {
      CompleteResolution c =
          complete_resolution(m, bottom_degree(n, 0) + lo - 3, top_degree(n, 0) + hi + 3,
                              opt.tail_search);
      tab = table_of(HomComplex(c.T, n).complex(), t, lo, hi);
      tab.provenance.push_back("Hom(T, N), complete resolution with threshold " + c.threshold.to_string());
      break;
    }
  }
  return tab;
}

LongExactSequenceReport am_sequence(const Complex& m, const Complex& n, int lo, int hi,
                                    const CohomologyOptions& opt) {
  ConeData d = cone_data(m, resolution_top(m, n, hi + 1), opt);
  Complex gs = shift(d.G.resolution, -1);
  // 0 -> G[-1] -> M(u) -> P -> 0
  ShortExactSequence ses = hom_sequence(gs, d.cone.complex, d.P.resolution, n, d.cone.inclusion,
                                        d.cone.projection);
  int top_hom = -(lo - 1);
  LongExactSequenceReport out;
  out.lo = lo;
  out.hi = hi;
  SequenceReport raw = homology_les(ses, -(hi + 1), top_hom);
  out.tables.push_back(table_from_sequence(raw, top_hom, 2, 1, Theory::gor, lo, hi));
  out.tables.push_back(table_from_sequence(raw, top_hom, 0, 0, Theory::abs, lo, hi));
  out.tables.push_back(table_from_sequence(raw, top_hom, 1, 0, Theory::bar, lo, hi));
  out.sequence = cohomological(std::move(raw), top_hom, {"Ext_R", "bar", "Ext_G"}, {0, 0, 1}, lo, hi);
  return out;
}

LongExactSequenceReport les_first_variable(const ShortExactSequence& ses, const Complex& n, int lo,
                                           int hi, Theory t, const CohomologyOptions& opt) {
  if (t != Theory::gor && t != Theory::bar)
    throw ValidationError("first-variable sequences are built for the gor and bar theories");
  HorseshoeResult hg = horseshoe(ses, HorseshoeFlavor::gp, opt.policy);
  ShortExactSequence homs;
  if (t == Theory::gor) {
    homs = hom_sequence(hg.left.resolution, hg.middle.resolution, hg.right.resolution, n,
                        hg.resolutions.i, hg.resolutions.p);
  } else {
    int top = resolution_top(ses.i.target(), n, hi + 1);
    HorseshoeResult hp = horseshoe(ses, HorseshoeFlavor::dg, opt.policy, top);
    ChainMap u1 = lift_through_precover(hp.left.map, hg.left);
    ChainMap u2 = lift_through_precover(hp.right.map, hg.right);
    // v_P - v_G u'' lands in M'; lift it through G' -> M' to fill the corner
    ChainMap diff = hp.lift - compose(hg.lift, u2);
    const Complex& p2 = hp.right.resolution;
    const Complex& m1 = ses.i.source();
    std::vector<Morphism> zparts;
    int zlo = std::min(p2.lo(), m1.lo());
    for (int j = zlo; j <= std::max(p2.hi(), m1.hi()); ++j) {
      Module s = p2.at(j), tg = m1.at(j);
      Matrix z(s.ring(), tg.gens(), s.gens());
      for (int c = 0; c < s.gens(); ++c) {
        auto pre = preimage(ses.i.at(j), diff.at(j).matrix().col(c));
        if (!pre) throw ValidationError("lift difference leaves the image of the injection");
        z.set_col(c, *pre);
      }
      zparts.emplace_back(s, tg, z);
    }
    ChainMap zmap(p2, m1, zlo, zparts);
    ChainMap w = lift_through_precover(zmap, hg.left);
    const Complex& pm = hp.middle.resolution;
    const Complex& gm = hg.middle.resolution;
    int ulo = std::min(pm.lo(), gm.lo()), uhi = std::max(pm.hi(), gm.hi());
    std::vector<Morphism> uparts;
    for (int j = ulo; j <= uhi; ++j) {
      Module a1 = hp.left.resolution.at(j), a2 = p2.at(j);
      Module b1 = hg.left.resolution.at(j), b2 = hg.right.resolution.at(j);
      uparts.push_back(block_morphism({b1, b2}, {a1, a2},
                                      {{u1.at(j), w.at(j)}, {Morphism::zero(a1, b2), u2.at(j)}}));
    }
    ChainMap um(pm, gm, ulo, uparts);
    if (compose(hg.middle.map, um) != hp.middle.map)
      throw ValidationError("middle lift does not cover the middle resolution");
    Cone c1 = mapping_cone(u1), cm = mapping_cone(um), c2 = mapping_cone(u2);
    int lo_c = std::min({c1.complex.lo(), cm.complex.lo(), c2.complex.lo()});
    int hi_c = std::max({c1.complex.hi(), cm.complex.hi(), c2.complex.hi()});
    std::vector<Morphism> inc, proj;
    for (int j = lo_c; j <= hi_c; ++j) {
      auto p1 = c1.parts(j), q2 = c2.parts(j);
      std::vector<Module> mid{p1[0], q2[0], p1[1], q2[1]};
      std::vector<std::vector<Morphism>> ib(4), pb(2);
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 2; ++k) {
          ib[i].push_back(i == 2 * k ? Morphism::identity(p1[k]) : Morphism::zero(p1[k], mid[i]));
        }
      for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 4; ++i)
          pb[k].push_back(i == 2 * k + 1 ? Morphism::identity(q2[k]) : Morphism::zero(mid[i], q2[k]));
      inc.push_back(block_morphism(mid, p1, ib));
      proj.push_back(block_morphism(q2, mid, pb));
    }
    ChainMap ci(c1.complex, cm.complex, lo_c, inc), cp(cm.complex, c2.complex, lo_c, proj);
    homs = hom_sequence(c1.complex, cm.complex, c2.complex, n, ci, cp);
  }
  int top_hom = -(lo - 1);
  LongExactSequenceReport out;
  out.lo = lo;
  out.hi = hi;
  SequenceReport raw = homology_les(homs, -(hi + 1), top_hom);
  for (int slot = 0; slot < 3; ++slot) out.tables.push_back(table_from_sequence(raw, top_hom, slot, 0, t, lo, hi));
  std::string e = to_string(t);
  out.sequence = cohomological(std::move(raw), top_hom, {e + "(M'')", e + "(M)", e + "(M')"}, {0, 0, 0},
                               lo, hi);
  return out;
}

std::vector<DegreeComparison> compare_bar_tate(const Complex& m, const Complex& n, int lo, int hi,
                                               const CohomologyOptions& opt) {
  int top = top_degree(m, lo - 1);
  if (lo <= top)
    throw ValidationError("comparison range must lie above the top degree " + std::to_string(top));
  CohomologyTable b = ext_groups(m, n, lo, hi, Theory::bar, opt);
  CohomologyTable t = ext_groups(m, n, lo, hi, Theory::tate, opt);
  std::vector<DegreeComparison> out;
  for (int j = lo; j <= hi; ++j)
    out.push_back({j, b.at(j), t.at(j), is_isomorphic(b.at(j), t.at(j))});
  return out;
}

ConeIndependence cone_independence(const Complex& m, const Complex& n, int lo, int hi, std::uint64_t seed) {
  ConeIndependence out;
  int top = resolution_top(m, n, hi) + 2;
  ConeData d = cone_data(m, top);
  const Complex& g = d.G.resolution;
  const Complex& p = d.P.resolution;
  ChainMap idg = ChainMap::identity(g), idp = ChainMap::identity(p);

  // two lifts of the same map
  std::mt19937_64 rng(seed);
  ChainMap v = lift_through_precover(d.P.map, d.G, &rng);
  Cone cv = mapping_cone(v);
  auto s = solve_homotopy(d.u, v);
  if (s) {
    ChainMap omega = cone_map(d.cone, cv, idg, idp, [&](int k) { return s->at(k); });
    ChainMap psi = cone_map(cv, d.cone, idg, idp, [&](int k) { return -s->at(k); });
    out.omega_psi_inverse = compose(psi, omega) == ChainMap::identity(d.cone.complex) &&
                            compose(omega, psi) == ChainMap::identity(cv.complex);
  }
  out.lift_tables_agree = table_of(HomComplex(d.cone.complex, n).complex(), Theory::bar, lo, hi)
                              .isomorphic_to(table_of(HomComplex(cv.complex, n).complex(), Theory::bar, lo, hi));

  // two resolutions
  ResolutionBundle p2 = dg_projective_resolution(m, top, DgRoute::padded, seed);
  ChainMap u2 = lift_through_precover(p2.map, d.G);
  Cone c2 = mapping_cone(u2);
  auto alpha = solve_lift(d.P.map, p2.map);
  auto beta = solve_lift(p2.map, d.P.map);
  if (alpha && beta) {
    auto t = solve_homotopy(d.u, compose(u2, *alpha));
    auto tb = solve_homotopy(u2, compose(d.u, *beta));
    if (t && tb) {
      ChainMap a = cone_map(d.cone, c2, idg, *alpha, [&](int k) { return t->at(k); });
      ChainMap b = cone_map(c2, d.cone, idg, *beta, [&](int k) { return tb->at(k); });
      // the top of both windows is a truncation artifact
      int trusted = top - 2;
      auto h1 = solve_homotopy(compose(b, a), ChainMap::identity(d.cone.complex), trusted);
      auto h2 = solve_homotopy(compose(a, b), ChainMap::identity(c2.complex), trusted);
      out.ba_homotopic = h1 && h1->verify(trusted);
      out.ab_homotopic = h2 && h2->verify(trusted);
    }
  }
  out.resolution_tables_agree =
      table_of(HomComplex(d.cone.complex, n).complex(), Theory::bar, lo, hi)
          .isomorphic_to(table_of(HomComplex(c2.complex, n).complex(), Theory::bar, lo, hi));
  return out;
}

Module module_ext(const Module& m, const Module& n, int degree) {
  const Ring& r = m.ring();
  if (degree < 0) return Module::zero(r);
  ResolutionBundle p = projective_resolution(m, degree + 1);
  const Complex& c = p.resolution;
  return hom_homology(c.at(degree - 1), c.at(degree), c.at(degree + 1), c.d(degree), c.d(degree + 1), n);
}

Module module_gorenstein_ext(const Module& m, const Module& n, int degree) {
  const Ring& r = m.ring();
  if (!r.is_finite()) return module_ext(m, n, degree);
  if (degree < 0) return Module::zero(r);
  Complex c = special_gp_resolution(m, 0).resolution;
  return hom_homology(c.at(degree - 1), c.at(degree), c.at(degree + 1), c.d(degree), c.d(degree + 1), n);
}

Module module_tate_ext(const Module& m, const Module& n, int degree) {
  const Ring& r = m.ring();
  Module out = Module::zero(r);
  if (!r.is_finite()) return out;
  int k = r.length();
  auto odd = [](int j) { return (j % 2 + 2) % 2 == 1; };
  for (Elem a : m.orders()) {
    if (a == 0) continue;  // free summands have contractible complete resolutions
    int v = r.valuation(a);
    auto d = [&](int j) { return pi_power(r, odd(j) ? v : k - v); };
    Morphism in = Morphism::identity(n).scaled(d(degree));
    Morphism outm = Morphism::identity(n).scaled(d(degree + 1));
    out = direct_sum(out, homology(in, outm).module);
  }
  return out;
}

}  // namespace gfd
