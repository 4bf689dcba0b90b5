#include "gfd/resolution.hpp"

#include <algorithm>

namespace gfd {

namespace {

Elem uniformizer(const Ring& r) { return r.length() > 1 ? static_cast<Elem>(r.prime()) : 0; }

// C restricted to degrees [lo, hi], cut brutally at both ends.
Complex window(const Complex& c, int lo, int hi) {
  return truncate(truncate(c, Truncation::hard_above, hi), Truncation::hard_below, lo);
}

std::map<int, ExtInt> kernel_pds(const ChainMap& phi) {
  std::map<int, ExtInt> out;
  const Complex& g = phi.source();
  if (g.empty()) return out;
  for (int n = g.lo(); n <= g.hi(); ++n)
    out[n] = module_dimension(kernel(phi.at(n)).module, DimKind::pd).value;
  return out;
}

bool termwise(const Complex& c, ClassName k) {
  if (c.empty()) return true;
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (!class_membership(c.at(n), k)) return false;
  return true;
}

std::pair<int, int> support_union(const Complex& a, const Complex& b) {
  if (a.empty()) return {b.lo(), b.hi()};
  if (b.empty()) return {a.lo(), a.hi()};
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

}  // namespace

std::string to_string(BundleFlavor f) {
  switch (f) {
    case BundleFlavor::projective: return "projective";
    case BundleFlavor::dg_projective: return "dg_projective";
    case BundleFlavor::injective_co: return "injective_co";
    case BundleFlavor::gp_precover: return "gp_precover";
  }
  return "?";
}

bool ResolutionBundle::verify() const {
  if (resolution.empty() && target.empty()) return true;
  auto [lo, hi] = support_union(resolution, target);
  if (flavor == BundleFlavor::injective_co) {
    if (valid_through) lo = std::max(lo, *valid_through);
    return analyze_chain_map(map, lo, hi).is_quasi_iso;
  }
  if (valid_through) hi = std::min(hi, *valid_through);
  if (hi < lo) return true;
  if (!analyze_chain_map(map, lo, hi).is_quasi_iso) return false;
  if (flavor == BundleFlavor::projective) return true;
  for (int n = lo; n <= hi; ++n)
    if (!is_surjective(map.at(n))) return false;
  if (flavor == BundleFlavor::dg_projective) return termwise(resolution, ClassName::projective);
  for (const auto& [n, pd] : kernel_profile)
    if (pd.is_pos_inf()) return false;
  return termwise(resolution, ClassName::gorenstein_projective);
}

// --- module resolutions -----------------------------------------------------

ResolutionBundle projective_resolution(const Module& m, int length) {
  const Ring& r = m.ring();
  Morphism eps = free_cover(m);
  std::vector<Module> mods{eps.source()};
  std::vector<Morphism> ds{Morphism::zero(eps.source(), Module::zero(r))};
  Morphism prev = eps;
  bool complete = false;
  for (int i = 1;; ++i) {
    Kernel k = kernel(prev);
    if (k.module.is_zero()) {
      complete = true;
      break;
    }
    if (i > length) break;
    Module f = Module::free(r, k.module.gens());
    Morphism d(f, mods.back(), k.inclusion.matrix());
    mods.push_back(f);
    ds.push_back(d);
    prev = d;
  }
  ResolutionBundle b;
  b.target = Complex::concentrated(m, 0);
  b.resolution = Complex(r, 0, mods, ds);
  b.map = ChainMap(b.resolution, b.target, 0, {eps});
  b.flavor = BundleFlavor::projective;
  if (!complete) b.valid_through = length - 1;
  return b;
}

ResolutionBundle injective_coresolution(const Module& m, int length) {
  const Ring& r = m.ring();
  if (!r.is_finite()) throw InfiniteRing("injective coresolutions need a finite ring");
  ResolutionBundle q = projective_resolution(character_dual(m), length);
  ResolutionBundle b;
  b.target = Complex::concentrated(m, 0);
  b.resolution = dual_complex(q.resolution);
  Morphism coaug = compose(character_dual(q.map.at(0)), double_dual_map(m));
  b.map = ChainMap(b.target, b.resolution, 0, {coaug});
  b.flavor = BundleFlavor::injective_co;
  if (q.valid_through) b.valid_through = -*q.valid_through;
  return b;
}

// --- DG-projective resolutions ---------------------------------------------

ResolutionBundle dg_projective_resolution(const Complex& n, int top, DgRoute route,
                                          std::uint64_t seed) {
  const Ring& r = n.ring();
  Complex nt = n.trimmed();
  ResolutionBundle b;
  b.target = n;
  b.flavor = BundleFlavor::dg_projective;
  if (nt.empty() || top < nt.lo()) {
    b.resolution = Complex::zero(r);
    b.map = ChainMap::zero(b.resolution, n);
    if (!nt.empty()) b.valid_through = top - 1;
    return b;
  }
  std::mt19937_64 rng(seed);
  auto draw = [&]() -> Elem {
    return r.is_finite() ? static_cast<Elem>(rng() % static_cast<std::uint64_t>(r.size()))
                         : static_cast<Elem>(rng() % 5) - 2;
  };
  int lo = nt.lo();
  std::vector<Module> mods;
  std::vector<Morphism> ds, phi;
  auto p_at = [&](int k) {
    int i = k - lo;
    return i >= 0 && i < static_cast<int>(mods.size()) ? mods[static_cast<std::size_t>(i)]
                                                       : Module::zero(r);
  };
  auto dp_at = [&](int k) {
    int i = k - lo;
    if (i >= 0 && i < static_cast<int>(ds.size())) return ds[static_cast<std::size_t>(i)];
    return Morphism::zero(p_at(k), p_at(k - 1));
  };
  auto phi_at = [&](int k) {
    int i = k - lo;
    if (i >= 0 && i < static_cast<int>(phi.size())) return phi[static_cast<std::size_t>(i)];
    return Morphism::zero(p_at(k), nt.at(k));
  };
  // The map whose kernel is K_k, from P_{k-1} (+) N_k.
  auto cycle_condition = [&](int k) {
    Module a = p_at(k - 1), c = nt.at(k);
    return block_morphism({p_at(k - 2), nt.at(k - 1)}, {a, c},
                          {{dp_at(k - 1), Morphism::zero(c, p_at(k - 2))},
                           {phi_at(k - 1), -nt.d(k)}});
  };
  // padded route: disk bottoms waiting for their top generator
  struct Disk {
    int bottom_index;
    Vec y;
  };
  std::vector<Disk> pending;
  bool complete = false;
  for (int k = lo; k <= top; ++k) {
    Morphism a = cycle_condition(k);
    Module src = a.source();
    int pdim = p_at(k - 1).gens();
    std::vector<Vec> cols;
    if (route == DgRoute::minimal) {
      Kernel ker = kernel(a);
      for (int j = 0; j < ker.module.gens(); ++j) cols.push_back(ker.inclusion.matrix().col(j));
    } else {
      Matrix sys = Matrix::hstack(a.matrix(), a.target().relations());
      Matrix raw = LinearSolver(sys).kernel();
      Vec combo(static_cast<std::size_t>(src.gens()), 0);
      for (int j = 0; j < raw.cols(); ++j) {
        Vec rc = raw.col(j);
        Vec v = src.reduce(Vec(rc.begin(), rc.begin() + src.gens()));
        if (vec_is_zero(v)) continue;
        cols.push_back(v);
        combo = vec_add(r, combo, vec_scale(r, draw(), v));
      }
      combo = src.reduce(combo);
      if (!vec_is_zero(combo) && k <= nt.hi() + 1) cols.push_back(combo);
      for (const Disk& dk : pending) {
        Vec v(static_cast<std::size_t>(pdim), 0);
        v[static_cast<std::size_t>(dk.bottom_index)] = 1;
        cols.push_back(vec_concat(v, dk.y));
      }
      pending.clear();
      // a new disk: bottom (0, dy) here, top (bottom, y) one degree up
      if (k < std::min(top, nt.hi() + 1)) {
        Module up = nt.at(k + 1);
        Vec y(static_cast<std::size_t>(up.gens()));
        for (auto& e : y) e = draw();
        y = up.reduce(y);
        Vec dy = nt.d(k + 1).apply(y);
        pending.push_back({static_cast<int>(cols.size()), y});
        cols.push_back(vec_concat(Vec(static_cast<std::size_t>(pdim), 0), dy));
      }
    }
    if (k > nt.hi() && cols.empty() && pending.empty()) {
      complete = true;
      break;
    }
    Module f = Module::free(r, static_cast<int>(cols.size()));
    Matrix dz(r, pdim, f.gens()), dy(r, nt.at(k).gens(), f.gens());
    for (int j = 0; j < f.gens(); ++j) {
      const Vec& v = cols[static_cast<std::size_t>(j)];
      dz.set_col(j, Vec(v.begin(), v.begin() + pdim));
      dy.set_col(j, Vec(v.begin() + pdim, v.end()));
    }
    mods.push_back(f);
    ds.push_back(Morphism(f, p_at(k - 1), dz));
    phi.push_back(Morphism(f, nt.at(k), dy));
  }
  if (!complete && top >= nt.hi() && pending.empty() && kernel(cycle_condition(top + 1)).module.is_zero())
    complete = true;
  b.resolution = Complex(r, lo, mods, ds);
  b.map = ChainMap(b.resolution, n, lo, phi);
  if (!complete) b.valid_through = top - 1;
  return b;
}

// --- complete resolutions ---------------------------------------------------

bool CompleteResolution::verify() const {
  const Ring& r = T.ring();
  if (!termwise(T, ClassName::projective)) return false;
  for (int j = window_lo + 1; j <= window_hi - 1; ++j)
    if (!homology_at(T, j).module.is_zero()) return false;
  HomComplex h(T, Complex::concentrated(Module::free(r, 1), 0));
  for (int j = window_lo + 1; j <= window_hi - 1; ++j)
    if (!homology_at(h.complex(), -j).module.is_zero()) return false;
  if (threshold.is_finite() || threshold.is_neg_inf()) {
    int from = threshold.is_finite() ? threshold.value() : window_lo;
    for (int j = std::max(from, window_lo); j <= window_hi; ++j)
      if (!u.at(j).matrix().is_identity() && !u.at(j).source().is_zero()) return false;
  }
  return true;
}

CompleteResolution complete_resolution(const Complex& n, int window_lo, int window_hi, int search) {
  const Ring& r = n.ring();
  ExtInt s = sup_h(n);
  CompleteResolution out;
  if (s.is_neg_inf()) {
    out.P = dg_projective_resolution(n, window_hi + 1);
    out.T = window(out.P.resolution, window_lo, window_hi);
    out.u = ChainMap::identity(out.T);
    out.threshold = ExtInt::neg_inf();
    out.window_lo = window_lo;
    out.window_hi = window_hi;
    out.certificate = "exact complex: T = P";
    return out;
  }
  int top = std::max(window_hi, s.value() + 4) + 1;
  out.P = dg_projective_resolution(n, top);
  const Complex& p = out.P.resolution;
  std::optional<int> g;
  Module cg;
  for (int c = s.value(); c <= s.value() + search && !g; ++c) {
    Module m = boundary_cokernel(p, c);
    if (class_membership(m, ClassName::gorenstein_projective)) g = c, cg = m;
  }
  if (!g)
    throw NoCompleteResolution("no C_g(P) with g in [" + s.to_string() + ", " +
                               std::to_string(s.value() + search) + "] is Gorenstein projective");
  int wlo = std::min(window_lo, *g - 1), whi = std::max(window_hi, *g + 1);
  // T below g
  std::vector<Module> below;  // below[i] = T_{g-1-i}
  std::vector<Morphism> below_d;  // below_d[i] = d^T_{g-i}
  Cokernel pi = cokernel(p.d(*g + 1));
  if (r.is_finite()) {
    ResolutionBundle q = projective_resolution(character_dual(cg), *g - wlo);
    Morphism top_d =
        compose(character_dual(q.map.at(0)), compose(double_dual_map(cg), pi.projection));
    below_d.push_back(top_d);
    for (int i = 0; i < *g - wlo; ++i) {
      below.push_back(character_dual(q.resolution.at(i)));
      if (i > 0) below_d.push_back(character_dual(q.resolution.d(i)));
    }
  } else {
    below.push_back(cg);
    below_d.push_back(pi.projection);
    for (int i = 1; i < *g - wlo; ++i) {
      below.push_back(Module::zero(r));
      below_d.push_back(Morphism::zero(below[i - 1], below[i]));
    }
  }
  std::vector<Module> mods;
  std::vector<Morphism> ds;
  for (int j = wlo; j <= whi; ++j) {
    Module m = j >= *g ? p.at(j) : below[static_cast<std::size_t>(*g - 1 - j)];
    mods.push_back(m);
    if (j == wlo)
      ds.push_back(Morphism::zero(m, Module::zero(r)));
    else if (j > *g)
      ds.push_back(p.d(j));
    else
      ds.push_back(below_d[static_cast<std::size_t>(*g - j)]);
  }
  out.T = Complex(r, wlo, mods, ds);
  Complex pw = window(p, wlo, whi);
  std::vector<Morphism> parts(static_cast<std::size_t>(whi - wlo + 1));
  for (int j = whi; j >= wlo; --j) {
    auto& slot = parts[static_cast<std::size_t>(j - wlo)];
    if (j >= *g) {
      slot = Morphism::identity(p.at(j));
      continue;
    }
    Morphism a = compose(p.d(j + 1), parts[static_cast<std::size_t>(j + 1 - wlo)]);
    auto c = extend_along(a, out.T.d(j + 1));
    if (!c) throw NoCompleteResolution("comparison map does not extend at degree " + std::to_string(j));
    slot = *c;
  }
  out.u = ChainMap(out.T, pw, wlo, parts);
  out.threshold = *g;
  out.window_lo = wlo;
  out.window_hi = whi;
  out.certificate = "C_" + std::to_string(*g) + "(P) = " + cg.to_string() + " is Gorenstein projective";
  // periodicity of the syzygies below the threshold
  std::vector<Vec> inv;
  bool any = false;
  for (int j = wlo + 1; j <= std::min(whi - 1, *g - 1); ++j) {
    Module c = boundary_cokernel(out.T, j);
    any = any || !c.is_zero();
    inv.push_back(c.invariants());
  }
  if (any)
    for (std::size_t per = 1; 2 * per <= inv.size() && !out.period; ++per) {
      bool ok = true;
      for (std::size_t i = 0; i + per < inv.size(); ++i) ok = ok && inv[i] == inv[i + per];
      if (ok) out.period = static_cast<int>(per);
    }
  return out;
}

// --- Gorenstein projective precovers ---------------------------------------

std::string to_string(PrecoverPolicy p) { return p == PrecoverPolicy::inductive ? "lemma7" : "identity"; }

PrecoverPolicy precover_policy_from_string(const std::string& s) {
  if (s == "lemma7") return PrecoverPolicy::inductive;
  if (s == "identity") return PrecoverPolicy::identity;
  throw ParseError("unknown precover policy '" + s + "'");
}

ResolutionBundle special_gp_resolution(const Module& m, int degree) {
  const Ring& r = m.ring();
  if (!r.is_finite())
    throw UnsupportedRing("module-level Gorenstein projective resolution needs a finite ring");
  ResolutionBundle b;
  b.target = Complex::concentrated(m, degree);
  b.flavor = BundleFlavor::gp_precover;
  if (m.is_zero()) {
    b.resolution = Complex::zero(r);
    b.map = ChainMap::zero(b.resolution, b.target);
    return b;
  }
  Morphism e = free_cover(m);
  const Module& f = e.source();
  Elem pi = uniformizer(r);
  Module g0 = direct_sum(m, f);
  Morphism d = block_morphism({m, f}, {f}, {{e.scaled(r.neg(pi))}, {Morphism::identity(f)}});
  Morphism aug = block_morphism({m}, {m, f}, {{Morphism::identity(m), e.scaled(pi)}});
  b.resolution = Complex(r, degree, {g0, f}, {Morphism::zero(g0, Module::zero(r)), d});
  b.map = ChainMap(b.resolution, b.target, degree, {aug});
  b.kernel_profile = kernel_pds(b.map);
  return b;
}

ResolutionBundle special_gp_precover(const Complex& m, PrecoverPolicy policy, PrecoverTrace* trace) {
  const Ring& r = m.ring();
  if (!r.is_finite()) {
    // Gorenstein projective = projective here; bounded complexes have
    // finite DG-projective resolutions.
    Complex mt = m.trimmed();
    int top = mt.empty() ? 0 : mt.hi() + 2;
    ResolutionBundle b = dg_projective_resolution(m, top);
    while (b.valid_through) b = dg_projective_resolution(m, top += 2);
    b.flavor = BundleFlavor::gp_precover;
    b.kernel_profile = kernel_pds(b.map);
    if (trace) trace->stages.push_back(b);
    return b;
  }
  if (policy == PrecoverPolicy::identity) {
    ResolutionBundle b;
    b.target = m;
    b.resolution = m;
    b.map = ChainMap::identity(m);
    b.flavor = BundleFlavor::gp_precover;
    b.kernel_profile = kernel_pds(b.map);
    if (trace) trace->stages.push_back(b);
    return b;
  }
  Complex mt = m.trimmed();
  if (mt.empty()) {
    ResolutionBundle b;
    b.target = m;
    b.resolution = Complex::zero(r);
    b.map = ChainMap::zero(b.resolution, m);
    b.flavor = BundleFlavor::gp_precover;
    return b;
  }
  ResolutionBundle stage = special_gp_resolution(mt.at(mt.lo()), mt.lo());
  if (trace) trace->stages.push_back(stage);
  for (int n = mt.lo(); n < mt.hi(); ++n) {
    const Complex& gbar = stage.resolution;
    const ChainMap& phibar = stage.map;
    Module next = mt.at(n + 1);
    Complex conc = Complex::concentrated(next, n);
    ResolutionBundle gp = special_gp_resolution(next, 0);
    Complex gps = shift(gp.resolution, n);
    ChainMap gn(gps, conc, n, {gp.map.at(0)});
    ChainMap l(conc, stage.target, n, {mt.d(n + 1)});
    auto u = solve_lift(compose(l, gn), phibar);
    if (!u) throw LiftNotFound("no lift of the next stage at degree " + std::to_string(n));
    Complex g = standard_cone(*u);
    Complex target = standard_cone(l);
    std::vector<Morphism> parts;
    for (int j = g.lo(); j <= g.hi(); ++j) {
      std::vector<Module> tg{stage.target.at(j), conc.at(j - 1)}, sc{gbar.at(j), gps.at(j - 1)};
      parts.push_back(block_morphism(tg, sc,
                                     {{phibar.at(j), Morphism::zero(sc[1], tg[0])},
                                      {Morphism::zero(sc[0], tg[1]), gn.at(j - 1)}}));
    }
    ResolutionBundle next_stage;
    next_stage.target = target;
    next_stage.resolution = g;
    next_stage.map = ChainMap(g, target, g.lo(), parts);
    next_stage.flavor = BundleFlavor::gp_precover;
    next_stage.kernel_profile = kernel_pds(next_stage.map);
    stage = std::move(next_stage);
    if (trace) {
      trace->lifts.push_back(*u);
      trace->stages.push_back(stage);
    }
  }
  // re-anchor on the caller's complex (same modules, same differentials)
  const Complex& g = stage.resolution;
  std::vector<Morphism> parts;
  for (int j = g.lo(); j <= g.hi(); ++j) parts.emplace_back(g.at(j), m.at(j), stage.map.at(j).matrix());
  stage.target = m;
  stage.map = ChainMap(g, m, g.lo(), parts);
  return stage;
}

// --- lifts and horseshoes ---------------------------------------------------

ChainMap lift_through_precover(const ChainMap& f, const ResolutionBundle& bundle, std::mt19937_64* rng) {
  ClassName gate = bundle.flavor == BundleFlavor::gp_precover ? ClassName::gorenstein_projective
                                                             : ClassName::projective;
  const Complex& x = f.source();
  if (!x.empty())
    for (int n = x.lo(); n <= x.hi(); ++n)
      if (!class_membership(x.at(n), gate))
        throw LiftNotFound("source component in degree " + std::to_string(n) + " is not " +
                           to_string(gate));
  auto u = solve_lift(f, bundle.map, rng);
  if (!u) throw LiftNotFound("no chain map lifts the given map through the resolution");
  return *u;
}

HorseshoeResult horseshoe(const ShortExactSequence& ses, HorseshoeFlavor flavor, PrecoverPolicy policy,
                          int top) {
  const ChainMap& l = ses.i;
  const ChainMap& h = ses.p;
  HorseshoeResult out;
  if (flavor == HorseshoeFlavor::gp) {
    out.left = special_gp_precover(l.source(), policy);
    out.right = special_gp_precover(h.target(), policy);
  } else {
    out.left = dg_projective_resolution(l.source(), top);
    out.right = dg_projective_resolution(h.target(), top);
  }
  auto u = solve_lift(out.right.map, h);
  if (!u)
    throw LiftNotFound("the resolution of the right term does not lift through the surjection");
  out.lift = *u;
  const Complex& g1 = out.left.resolution;
  const Complex& g2 = out.right.resolution;
  const Complex& mid = l.target();
  Complex g = direct_sum(g1, g2);
  std::vector<Morphism> parts;
  int lo = g.empty() ? 0 : g.lo();
  for (int j = lo; j <= g.hi(); ++j)
    parts.push_back(block_morphism({mid.at(j)}, {g1.at(j), g2.at(j)},
                                   {{compose(l.at(j), out.left.map.at(j)), u->at(j)}}));
  out.middle.target = mid;
  out.middle.resolution = g;
  out.middle.map = ChainMap(g, mid, lo, parts);
  out.middle.flavor = out.left.flavor;
  if (out.left.valid_through || out.right.valid_through)
    out.middle.valid_through = std::min(out.left.valid_through.value_or(top),
                                        out.right.valid_through.value_or(top));
  if (flavor == HorseshoeFlavor::gp) out.middle.kernel_profile = kernel_pds(out.middle.map);
  out.resolutions = {sum_inclusion(g1, g2, 0), sum_projection(g1, g2, 1)};
  KernelComplex k1 = kernel_complex(out.left.map), k = kernel_complex(out.middle.map),
                k2 = kernel_complex(out.right.map);
  out.kernels = {induced_on_kernels(out.resolutions.i, k1, k),
                 induced_on_kernels(out.resolutions.p, k, k2)};
  return out;
}

}  // namespace gfd
