#include "gfd/fixtures.hpp"

namespace gfd {

FixtureGenerator::FixtureGenerator(Ring ring, std::uint64_t seed, FixtureBounds bounds)
    : ring_(std::move(ring)), rng_(seed), bounds_(bounds) {}

int FixtureGenerator::between(int lo, int hi) {
  return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Elem FixtureGenerator::element() {
  if (ring_.is_finite()) return static_cast<Elem>(rng_() % static_cast<std::uint64_t>(ring_.size()));
  return between(-bounds_.int_bound, bounds_.int_bound);
}

Module FixtureGenerator::module(int min_gens) {
  int g = between(min_gens, bounds_.max_gens);
  if (!ring_.is_finite()) return Module::free(ring_, g);
  Vec orders;
  for (int i = 0; i < g; ++i) {
    int v = between(1, ring_.length());  // v = length means a free summand
    Elem a = 1;
    for (int t = 0; t < v; ++t) a *= ring_.prime();
    orders.push_back(v == ring_.length() ? 0 : a);
  }
  return Module(ring_, orders);
}

Vec FixtureGenerator::vector(const Module& m) {
  Vec v(static_cast<std::size_t>(m.gens()));
  for (auto& x : v) x = element();
  return m.reduce(v);
}

Morphism FixtureGenerator::morphism(const Module& a, const Module& b) {
  HomSpace h(a, b);
  return h.to_morphism(vector(h.module()));
}

Complex FixtureGenerator::complex() {
  int len = between(1, bounds_.max_support);
  int lo = between(-1, 1);
  std::vector<Module> mods;
  std::vector<Morphism> ds;
  for (int i = 0; i < len; ++i) {
    mods.push_back(module(ring_.is_finite() ? 0 : 1));
    if (i == 0) {
      ds.push_back(Morphism::zero(mods[0], Module::zero(ring_)));
      continue;
    }
    // d_n lands in the kernel of d_{n-1}
    Kernel k = kernel(ds.back());
    ds.push_back(compose(k.inclusion, morphism(mods[i], k.module)));
  }
  return Complex(ring_, lo, mods, ds);
}

Complex FixtureGenerator::exact_complex() {
  int lo = between(-1, 1);
  if (rng_() % 2 == 0) {
    // cone of an identity: contractible
    FixtureBounds small = bounds_;
    small.max_support = std::max(1, bounds_.max_support - 1);
    FixtureGenerator sub(ring_, rng_(), small);
    Complex x = sub.complex();
    return shift(standard_cone(ChainMap::identity(x)), lo - x.lo());
  }
  // 0 -> ker f -> B -> im f -> 0
  Module b = module(1);
  Module c = module(1);
  Morphism f = morphism(b, c);
  Kernel k = kernel(f);
  Image im = image(f);
  Matrix onto(ring_, im.module.gens(), b.gens());
  for (int j = 0; j < b.gens(); ++j) onto.set_col(j, im.sq.coords(f.matrix().col(j)));
  Morphism p(b, im.module, onto);
  return Complex(ring_, lo, {im.module, b, k.module},
                 {Morphism::zero(im.module, Module::zero(ring_)), p, k.inclusion})
      .trimmed();
}

Complex FixtureGenerator::nonexact_complex() {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Complex c = complex();
    if (!is_exact(c)) return c;
  }
  throw Error("FixtureExhausted", "could not draw a non-exact complex");
}

ChainMap FixtureGenerator::chain_map(const Complex& x, const Complex& y) {
  HomComplex h(x, y);
  Kernel z = kernel(h.complex().d(0));
  const Module& h0 = h.complex().at(0);
  Vec e(static_cast<std::size_t>(h0.gens()), 0);
  for (int j = 0; j < z.module.gens(); ++j)
    e = vec_add(ring_, e, vec_scale(ring_, element(), z.inclusion.matrix().col(j)));
  return h.to_chain_map(h0.reduce(e));
}

ShortExactSequence FixtureGenerator::split_ses(bool boundary_twist) {
  Complex a = complex(), c = complex();
  HomComplex h(c, a);
  const Module& hm = h.complex().at(-1);
  Vec tau(static_cast<std::size_t>(hm.gens()), 0);
  if (boundary_twist) {
    tau = h.complex().d(0).apply(vector(h.complex().at(0)));
  } else {
    Kernel z = kernel(h.complex().d(-1));
    for (int j = 0; j < z.module.gens(); ++j)
      tau = vec_add(ring_, tau, vec_scale(ring_, element(), z.inclusion.matrix().col(j)));
  }
  tau = hm.reduce(tau);
  int lo = std::min(a.lo(), c.lo()), hi = std::max(a.hi(), c.hi());
  std::vector<Module> mods;
  std::vector<Morphism> ds;
  for (int n = lo; n <= hi; ++n) {
    mods.push_back(direct_sum(a.at(n), c.at(n)));
    if (n == lo) {
      ds.push_back(Morphism::zero(mods.back(), Module::zero(ring_)));
      continue;
    }
    ds.push_back(block_morphism({a.at(n - 1), c.at(n - 1)}, {a.at(n), c.at(n)},
                                {{a.d(n), h.component(-1, tau, n)},
                                 {Morphism::zero(a.at(n), c.at(n - 1)), c.d(n)}}));
  }
  Complex b(ring_, lo, mods, ds);
  std::vector<Morphism> ip, pp;
  for (int n = lo; n <= hi; ++n) {
    Module x = a.at(n), y = c.at(n);
    ip.push_back(block_morphism({x, y}, {x}, {{Morphism::identity(x)}, {Morphism::zero(x, y)}}));
    pp.push_back(block_morphism({y}, {x, y}, {{Morphism::zero(x, y), Morphism::identity(y)}}));
  }
  return {ChainMap(a, b, lo, ip), ChainMap(b, c, lo, pp)};
}

Complex two_term_multiplication(const Ring& r) {
  Elem two = r.is_finite() ? r.prime() : 2;
  Module f = Module::free(r, 1);
  return Complex(r, 0, {f, f},
                 {Morphism::zero(f, Module::zero(r)), Morphism(f, f, Matrix(r, 1, 1, {two}))});
}

Complex residue_field_at_zero(const Ring& r) {
  return Complex::concentrated(Module::cyclic(r, r.is_finite() ? r.prime() : 2), 0);
}

}  // namespace gfd
