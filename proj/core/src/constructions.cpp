#include "gfd/constructions.hpp"

#include <algorithm>

#include "gfd/classes.hpp"

namespace gfd {

namespace {

int sign_of(int n) { return n % 2 == 0 ? 1 : -1; }

Vec unit_vector(int n, int k) {
  Vec e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return e;
}

void add_into(const Ring& r, Vec& dst, int offset, const Vec& src, Elem sign = 1) {
  for (std::size_t i = 0; i < src.size(); ++i) {
    Elem v = sign == 1 ? src[i] : r.neg(src[i]);
    dst[offset + i] = r.add(dst[offset + i], v);
  }
}

Complex assemble(const Ring& r, int lo, const std::vector<Module>& mods,
                 const std::vector<Matrix>& diffs) {
  std::vector<Morphism> ds;
  for (std::size_t i = 0; i < mods.size(); ++i)
    ds.push_back(i == 0 ? Morphism::zero(mods[0], Module::zero(r))
                        : Morphism(mods[i], mods[i - 1], diffs[i]));
  return Complex(r, lo, mods, ds);
}

Module sum_of(const Ring& r, const std::vector<Module>& parts) {
  Vec o;
  for (const auto& p : parts) o = vec_concat(o, p.orders());
  return Module(r, o);
}

}  // namespace

// --- Hom complex ----------------------------------------------------------

HomComplex::HomComplex(Complex source, Complex target)
    : src_(std::move(source)), tgt_(std::move(target)) {
  const Ring& r = src_.ring();
  if (r != tgt_.ring()) throw RingMismatch("Hom complex over different rings");
  if (src_.empty() || tgt_.empty()) {
    complex_ = Complex::zero(r);
    return;
  }
  lo_ = tgt_.lo() - src_.hi();
  int hi = tgt_.hi() - src_.lo();
  std::vector<Module> mods;
  for (int n = lo_; n <= hi; ++n) {
    std::vector<Block> bl;
    std::vector<Module> parts;
    int offset = 0;
    for (int p = src_.lo(); p <= src_.hi(); ++p) {
      Module xp = src_.at(p), yq = tgt_.at(p + n);
      if (xp.is_zero() || yq.is_zero()) continue;
      HomSpace hs(xp, yq);
      if (hs.module().is_zero()) continue;
      parts.push_back(hs.module());
      int g = hs.module().gens();
      bl.push_back({p, std::move(hs), offset});
      offset += g;
    }
    blocks_.push_back(std::move(bl));
    mods.push_back(sum_of(r, parts));
  }
  std::vector<Matrix> diffs;
  for (int n = lo_; n <= hi; ++n) {
    const Module& here = mods[static_cast<std::size_t>(n - lo_)];
    if (n == lo_) {
      diffs.emplace_back(r, 0, here.gens());
      continue;
    }
    const Module& below = mods[static_cast<std::size_t>(n - 1 - lo_)];
    Matrix m(r, below.gens(), here.gens());
    const auto& down = blocks(n - 1);
    auto find = [&](int p) -> const Block* {
      for (const auto& b : down)
        if (b.p == p) return &b;
      return nullptr;
    };
    Elem sgn = sign_of(n) == 1 ? r.neg(1) : 1;  // -(-1)^n
    for (const auto& b : blocks(n)) {
      const Block* same = find(b.p);
      const Block* next = find(b.p + 1);
      Matrix dy = tgt_.d(b.p + n).matrix();
      Matrix dx = src_.d(b.p + 1).matrix();
      for (int s = 0; s < b.space.module().gens(); ++s) {
        Matrix f = b.space.to_morphism(unit_vector(b.space.module().gens(), s)).matrix();
        Vec col(static_cast<std::size_t>(below.gens()), 0);
        if (same) add_into(r, col, same->offset, same->space.to_element(dy * f));
        if (next) {
          Vec v = next->space.to_element(f * dx);
          add_into(r, col, next->offset, vec_scale(r, sgn, v));
        }
        m.set_col(b.offset + s, col);
      }
    }
    diffs.push_back(m);
  }
  complex_ = assemble(r, lo_, mods, diffs);
}

const std::vector<HomComplex::Block>& HomComplex::blocks(int n) const {
  static const std::vector<Block> none;
  int i = n - lo_;
  if (i < 0 || i >= static_cast<int>(blocks_.size())) return none;
  return blocks_[static_cast<std::size_t>(i)];
}

Vec HomComplex::pack(int n, const std::map<int, Morphism>& parts) const {
  Vec e(static_cast<std::size_t>(complex_.at(n).gens()), 0);
  for (const auto& b : blocks(n)) {
    auto it = parts.find(b.p);
    if (it == parts.end()) continue;
    Vec v = b.space.to_element(it->second.matrix());
    std::copy(v.begin(), v.end(), e.begin() + b.offset);
  }
  return e;
}

Morphism HomComplex::component(int n, const Vec& element, int p) const {
  for (const auto& b : blocks(n))
    if (b.p == p) {
      Vec part(element.begin() + b.offset, element.begin() + b.offset + b.space.module().gens());
      return b.space.to_morphism(part);
    }
  return Morphism::zero(src_.at(p), tgt_.at(p + n));
}

std::map<int, Morphism> HomComplex::unpack(int n, const Vec& element) const {
  std::map<int, Morphism> out;
  for (int p = src_.lo(); p <= src_.hi(); ++p) out.emplace(p, component(n, element, p));
  return out;
}

ChainMap HomComplex::to_chain_map(const Vec& element) const {
  int lo = std::min(src_.lo(), tgt_.lo()), hi = std::max(src_.hi(), tgt_.hi());
  std::vector<Morphism> parts;
  for (int p = lo; p <= hi; ++p) parts.push_back(component(0, element, p));
  return ChainMap(src_, tgt_, lo, parts);
}

Vec HomComplex::from_chain_map(const ChainMap& f) const {
  std::map<int, Morphism> parts;
  for (int p = src_.lo(); p <= src_.hi(); ++p) parts.emplace(p, f.at(p));
  return pack(0, parts);
}

namespace {

// Applies a degreewise transformation of Hom components between two Hom
// complexes; `op(n, p, f)` returns the new component and its index p'.
template <class Op>
ChainMap hom_transform(const HomComplex& from, const HomComplex& to, Op op) {
  const Complex& a = from.complex();
  const Complex& b = to.complex();
  const Ring& r = a.ring();
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  if (a.empty() || b.empty()) return ChainMap::zero(a, b);
  std::vector<Morphism> parts;
  for (int n = lo; n <= hi; ++n) {
    Module s = a.at(n), t = b.at(n);
    Matrix m(r, t.gens(), s.gens());
    for (int k = 0; k < s.gens(); ++k) {
      Vec e = unit_vector(s.gens(), k);
      std::map<int, Morphism> out;
      for (const auto& [p, f] : from.unpack(n, e)) {
        if (f.is_zero()) continue;
        auto [q, g] = op(n, p, f);
        auto it = out.find(q);
        if (it == out.end())
          out.emplace(q, g);
        else
          it->second = it->second + g;
      }
      m.set_col(k, to.pack(n, out));
    }
    parts.emplace_back(s, t, m);
  }
  return ChainMap(a, b, lo, parts);
}

}  // namespace

ChainMap hom_precompose(const HomComplex& from, const HomComplex& to, const ChainMap& c) {
  return hom_transform(from, to, [&](int, int p, const Morphism& f) {
    return std::pair<int, Morphism>(p, compose(f, c.at(p)));
  });
}

ChainMap hom_postcompose(const HomComplex& from, const HomComplex& to, const ChainMap& c) {
  return hom_transform(from, to, [&](int n, int p, const Morphism& f) {
    return std::pair<int, Morphism>(p, compose(c.at(p + n), f));
  });
}

// --- tensor complex -------------------------------------------------------

TensorComplex::TensorComplex(Complex left, Complex right)
    : left_(std::move(left)), right_(std::move(right)) {
  const Ring& r = left_.ring();
  if (r != right_.ring()) throw RingMismatch("tensor complex over different rings");
  if (left_.empty() || right_.empty()) {
    complex_ = Complex::zero(r);
    return;
  }
  int lo = left_.lo() + right_.lo(), hi = left_.hi() + right_.hi();
  struct Block {
    int t;
    TensorSpace space;
    int offset;
  };
  std::vector<std::vector<Block>> blocks;
  std::vector<Module> mods;
  for (int n = lo; n <= hi; ++n) {
    std::vector<Block> bl;
    std::vector<Module> parts;
    int offset = 0;
    for (int t = left_.lo(); t <= left_.hi(); ++t) {
      TensorSpace ts(left_.at(t), right_.at(n - t));
      if (ts.module().is_zero()) continue;
      parts.push_back(ts.module());
      int g = ts.module().gens();
      bl.push_back({t, std::move(ts), offset});
      offset += g;
    }
    blocks.push_back(std::move(bl));
    mods.push_back(sum_of(r, parts));
  }
  auto find = [&](int n, int t) -> const Block* {
    int i = n - lo;
    if (i < 0 || i >= static_cast<int>(blocks.size())) return nullptr;
    for (const auto& b : blocks[static_cast<std::size_t>(i)])
      if (b.t == t) return &b;
    return nullptr;
  };
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    const Module& here = mods[static_cast<std::size_t>(n - lo)];
    if (n == lo) {
      diffs.emplace_back(r, 0, here.gens());
      continue;
    }
    Matrix m(r, mods[static_cast<std::size_t>(n - 1 - lo)].gens(), here.gens());
    for (const auto& b : blocks[static_cast<std::size_t>(n - lo)]) {
      int t = b.t;
      Matrix dx = left_.d(t).matrix();
      Matrix dy = right_.d(n - t).matrix();
      const Block* first = find(n - 1, t - 1);
      const Block* second = find(n - 1, t);
      Elem sg = sign_of(t) == 1 ? 1 : r.neg(1);
      for (int i = 0; i < b.space.left().gens(); ++i)
        for (int j = 0; j < b.space.right().gens(); ++j) {
          int col = b.space.index(i, j);
          if (col < 0) continue;
          col += b.offset;
          if (first)
            for (int k = 0; k < first->space.left().gens(); ++k) {
              int row = first->space.index(k, j);
              if (row < 0 || dx.at(k, i) == 0) continue;
              row += first->offset;
              m.at(row, col) = r.add(m.at(row, col), dx.at(k, i));
            }
          if (second)
            for (int l = 0; l < second->space.right().gens(); ++l) {
              int row = second->space.index(i, l);
              if (row < 0 || dy.at(l, j) == 0) continue;
              row += second->offset;
              m.at(row, col) = r.add(m.at(row, col), r.mul(sg, dy.at(l, j)));
            }
        }
    }
    diffs.push_back(m);
  }
  complex_ = assemble(r, lo, mods, diffs);
}

// --- duals ----------------------------------------------------------------

Complex dual_complex(const Complex& c) {
  const Ring& r = c.ring();
  if (!r.is_finite()) throw InfiniteRing("dual complex needs a finite ring (got " + r.name() + ")");
  if (c.empty()) return Complex::zero(r);
  std::vector<Module> mods;
  std::vector<Morphism> ds;
  for (int n = -c.hi(); n <= -c.lo(); ++n) {
    mods.push_back(character_dual(c.at(-n)));
    ds.push_back(character_dual(c.d(-n + 1)));
  }
  ds.front() = Morphism::zero(mods.front(), Module::zero(r));
  return Complex(r, -c.hi(), mods, ds);
}

ChainMap dual_map(const ChainMap& f, const Complex& dual_source, const Complex& dual_target) {
  // f: X -> Y gives Y^+ -> X^+; dual_source is Y^+ and dual_target is X^+.
  int lo = std::min(dual_source.lo(), dual_target.lo());
  int hi = std::max(dual_source.hi(), dual_target.hi());
  std::vector<Morphism> parts;
  for (int n = lo; n <= hi; ++n) parts.push_back(character_dual(f.at(-n)));
  return ChainMap(dual_source, dual_target, lo, parts);
}

// --- cones and sums -------------------------------------------------------

std::vector<Module> Cone::parts(int n) const {
  return {u.target().at(n + 1), u.source().at(n)};
}

namespace {

// Cone complex with component G_{n+off} (+) P_{n+off-1}; off = 1 gives the
// M(u) indexing and off = 0 the usual one.
Complex cone_complex(const ChainMap& u, int off) {
  const Complex& p = u.source();
  const Complex& g = u.target();
  const Ring& r = p.ring();
  int lo = std::min(g.lo() - off, p.lo() - off + 1);
  int hi = std::max(g.hi() - off, p.hi() - off + 1);
  if (p.empty()) lo = g.lo() - off, hi = g.hi() - off;
  if (g.empty()) lo = p.lo() - off + 1, hi = p.hi() - off + 1;
  if (p.empty() && g.empty()) return Complex::zero(r);
  std::vector<Module> mods;
  std::vector<Morphism> ds;
  for (int n = lo; n <= hi; ++n) {
    int a = n + off, b = n + off - 1;  // G_a (+) P_b
    std::vector<Module> src{g.at(a), p.at(b)}, tgt{g.at(a - 1), p.at(b - 1)};
    mods.push_back(sum_of(r, src));
    if (n == lo) {
      ds.push_back(Morphism::zero(mods.back(), Module::zero(r)));
      continue;
    }
    ds.push_back(block_morphism(tgt, src,
                                {{g.d(a), u.at(b)},
                                 {Morphism::zero(g.at(a), p.at(b - 1)), -p.d(b)}}));
  }
  return Complex(r, lo, mods, ds);
}

}  // namespace

Cone mapping_cone(const ChainMap& u) {
  const Complex& p = u.source();
  const Complex& g = u.target();
  const Ring& r = p.ring();
  Cone c{u, cone_complex(u, 1), {}, {}};
  Complex gs = shift(g, -1);
  int lo = std::min(c.complex.lo(), std::min(gs.lo(), p.lo()));
  int hi = std::max(c.complex.hi(), std::max(gs.hi(), p.hi()));
  std::vector<Morphism> inc, proj;
  for (int n = lo; n <= hi; ++n) {
    auto parts = c.parts(n);
    Module m = c.complex.at(n);
    Elem s = sign_of(n) == 1 ? 1 : r.neg(1);
    if (m.is_zero()) {
      inc.push_back(Morphism::zero(gs.at(n), m));
      proj.push_back(Morphism::zero(m, p.at(n)));
      continue;
    }
    inc.push_back(block_morphism({parts[0], parts[1]}, {parts[0]},
                                 {{Morphism::identity(parts[0]).scaled(s)},
                                  {Morphism::zero(parts[0], parts[1])}}));
    proj.push_back(block_morphism({parts[1]}, {parts[0], parts[1]},
                                  {{Morphism::zero(parts[0], parts[1]),
                                    Morphism::identity(parts[1]).scaled(s)}}));
  }
  c.inclusion = ChainMap(gs, c.complex, lo, inc);
  c.projection = ChainMap(c.complex, p, lo, proj);
  return c;
}

Complex standard_cone(const ChainMap& u) { return cone_complex(u, 0); }

ChainMap cone_map(const Cone& from, const Cone& to, const ChainMap& a, const ChainMap& b,
                  const std::function<Morphism(int)>& t) {
  int lo = std::min(from.complex.lo(), to.complex.lo());
  int hi = std::max(from.complex.hi(), to.complex.hi());
  std::vector<Morphism> parts;
  for (int n = lo; n <= hi; ++n) {
    auto s = from.parts(n), d = to.parts(n);
    parts.push_back(block_morphism(
        d, s, {{a.at(n + 1), t(n)}, {Morphism::zero(s[0], d[1]), b.at(n)}}));
  }
  return ChainMap(from.complex, to.complex, lo, parts);
}

Complex direct_sum(const Complex& a, const Complex& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const Ring& r = a.ring();
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<Module> mods;
  std::vector<Morphism> ds;
  for (int n = lo; n <= hi; ++n) {
    mods.push_back(direct_sum(a.at(n), b.at(n)));
    ds.push_back(n == lo ? Morphism::zero(mods.back(), Module::zero(r))
                         : direct_sum(a.d(n), b.d(n)));
  }
  return Complex(r, lo, mods, ds);
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  Complex s = direct_sum(f.source(), g.source()), t = direct_sum(f.target(), g.target());
  int lo = std::min(s.lo(), t.lo()), hi = std::max(s.hi(), t.hi());
  std::vector<Morphism> parts;
  for (int n = lo; n <= hi; ++n) parts.push_back(direct_sum(f.at(n), g.at(n)));
  return ChainMap(s, t, lo, parts);
}

ChainMap sum_inclusion(const Complex& a, const Complex& b, int which) {
  Complex s = direct_sum(a, b);
  const Complex& part = which == 0 ? a : b;
  std::vector<Morphism> parts;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    Module x = a.at(n), y = b.at(n);
    Morphism ix = which == 0 ? Morphism::identity(x) : Morphism::zero(y, x);
    Morphism iy = which == 0 ? Morphism::zero(x, y) : Morphism::identity(y);
    parts.push_back(block_morphism({x, y}, {part.at(n)}, {{ix}, {iy}}));
  }
  return ChainMap(part, s, s.lo(), parts);
}

ChainMap sum_projection(const Complex& a, const Complex& b, int which) {
  Complex s = direct_sum(a, b);
  const Complex& part = which == 0 ? a : b;
  std::vector<Morphism> parts;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    Module x = a.at(n), y = b.at(n);
    Morphism px = which == 0 ? Morphism::identity(x) : Morphism::zero(x, y);
    Morphism py = which == 0 ? Morphism::zero(y, x) : Morphism::identity(y);
    parts.push_back(block_morphism({part.at(n)}, {x, y}, {{px, py}}));
  }
  return ChainMap(s, part, s.lo(), parts);
}

KernelComplex kernel_complex(const ChainMap& phi) {
  const Complex& x = phi.source();
  const Ring& r = x.ring();
  KernelComplex out;
  if (x.empty()) {
    out.complex = Complex::zero(r);
    out.inclusion = ChainMap::zero(out.complex, x);
    return out;
  }
  out.lo = x.lo();
  std::vector<Module> mods;
  std::vector<Morphism> ds, inc;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    out.kernels.push_back(kernel(phi.at(n)));
    const Kernel& k = out.kernels.back();
    mods.push_back(k.module);
    inc.push_back(k.inclusion);
    if (n == x.lo()) {
      ds.push_back(Morphism::zero(k.module, Module::zero(r)));
      continue;
    }
    const Kernel& below = out.kernels[out.kernels.size() - 2];
    Matrix m(r, below.module.gens(), k.module.gens());
    for (int j = 0; j < k.module.gens(); ++j)
      m.set_col(j, below.sq.coords(x.d(n).matrix() * k.inclusion.matrix().col(j)));
    ds.emplace_back(k.module, below.module, m);
  }
  out.complex = Complex(r, x.lo(), mods, ds);
  out.inclusion = ChainMap(out.complex, x, x.lo(), inc);
  return out;
}

ChainMap induced_on_kernels(const ChainMap& c, const KernelComplex& a, const KernelComplex& b) {
  const Ring& r = c.source().ring();
  int lo = std::min(a.complex.lo(), b.complex.lo());
  int hi = std::max(a.complex.hi(), b.complex.hi());
  std::vector<Morphism> parts;
  for (int n = lo; n <= hi; ++n) {
    Module s = a.complex.at(n), t = b.complex.at(n);
    Matrix m(r, t.gens(), s.gens());
    if (!t.is_zero())
      for (int j = 0; j < s.gens(); ++j)
        m.set_col(j, b.at(n).sq.coords(c.at(n).matrix() * a.at(n).inclusion.matrix().col(j)));
    parts.emplace_back(s, t, m);
  }
  return ChainMap(a.complex, b.complex, lo, parts);
}

bool ShortExactSequence::verify() const {
  if (i.target() != p.source()) return false;
  const Complex& b = i.target();
  int lo = std::min({i.source().lo(), b.lo(), p.target().lo()});
  int hi = std::max({i.source().hi(), b.hi(), p.target().hi()});
  for (int n = lo; n <= hi; ++n) {
    if (!is_injective(i.at(n)) || !is_surjective(p.at(n))) return false;
    if (!is_exact_at(i.at(n), p.at(n))) return false;
  }
  return true;
}

int SequenceReport::checked() const {
  return static_cast<int>(std::count_if(exact.begin(), exact.end(),
                                        [](const auto& e) { return e.has_value(); }));
}

int SequenceReport::failures() const {
  return static_cast<int>(std::count_if(exact.begin(), exact.end(),
                                        [](const auto& e) { return e.has_value() && !*e; }));
}

Morphism connecting_map(const ShortExactSequence& ses, int n) {
  const Complex& a = ses.i.source();
  const Complex& b = ses.i.target();
  const Complex& c = ses.p.target();
  Homology hc = homology_at(c, n), ha = homology_at(a, n - 1);
  Matrix m(a.ring(), ha.module.gens(), hc.module.gens());
  for (int j = 0; j < hc.module.gens(); ++j) {
    Vec z = c.at(n).reduce(hc.sq.generators().col(j));
    auto lift = preimage(ses.p.at(n), z);
    if (!lift) throw ValidationError("connecting map: degreewise surjectivity fails");
    Vec db = b.d(n).apply(*lift);
    auto back = preimage(ses.i.at(n - 1), db);
    if (!back) throw ValidationError("connecting map: boundary does not come from the sub");
    m.set_col(j, ha.sq.coords(*back));
  }
  return Morphism(hc.module, ha.module, m);
}

SequenceReport homology_les(const ShortExactSequence& ses, int lo, int hi) {
  SequenceReport rep;
  auto label = [](const char* x, int n) { return std::string("H_") + std::to_string(n) + "(" + x + ")"; };
  for (int n = hi; n >= lo; --n) {
    rep.objects.push_back(homology_at(ses.i.source(), n).module);
    rep.labels.push_back(label("A", n));
    rep.maps.push_back(induced_map(ses.i, n));
    rep.objects.push_back(homology_at(ses.i.target(), n).module);
    rep.labels.push_back(label("B", n));
    rep.maps.push_back(induced_map(ses.p, n));
    rep.objects.push_back(homology_at(ses.p.target(), n).module);
    rep.labels.push_back(label("C", n));
    if (n > lo) rep.maps.push_back(connecting_map(ses, n));
  }
  rep.exact.assign(rep.objects.size(), std::nullopt);
  for (std::size_t k = 1; k + 1 < rep.objects.size(); ++k)
    rep.exact[k] = is_exact_at(rep.maps[k - 1], rep.maps[k]);
  return rep;
}

ChainMapAnalysis analyze_chain_map(const ChainMap& f, std::optional<int> lo,
                                   std::optional<int> hi) {
  int a = lo ? *lo : std::min(f.source().lo(), f.target().lo());
  int b = hi ? *hi : std::max(f.source().hi(), f.target().hi());
  ChainMapAnalysis out;
  for (int n = a; n <= b; ++n) {
    Morphism h = induced_map(f, n);
    if (!is_isomorphism(h)) {
      out.is_quasi_iso = false;
      out.failing_degrees.push_back(n);
    }
    out.induced.emplace(n, h);
  }
  return out;
}

namespace {

ChainMap restrict_source(const ChainMap& f, const Complex& x) {
  int lo = std::min(x.lo(), f.target().lo());
  int hi = std::max(x.hi(), f.target().hi());
  std::vector<Morphism> parts;
  for (int n = lo; n <= hi; ++n)
    parts.push_back(x.at(n).is_zero() ? Morphism::zero(x.at(n), f.target().at(n)) : f.at(n));
  return ChainMap(x, f.target(), lo, parts);
}

}  // namespace

std::optional<Homotopy> solve_homotopy(const ChainMap& f, const ChainMap& g,
                                       std::optional<int> top) {
  if (f.source() != g.source() || f.target() != g.target())
    throw EndpointMismatch("homotopy between maps with different endpoints");
  Complex x = top ? truncate(f.source(), Truncation::hard_above, *top) : f.source();
  ChainMap diff = restrict_source(f, x) - restrict_source(g, x);
  HomComplex h(x, f.target());
  Vec target = h.from_chain_map(diff);
  auto s = preimage(h.complex().d(1), target);
  if (!s) return std::nullopt;
  Homotopy out{f, g, {}, x.lo()};
  for (int p = x.lo(); p <= x.hi(); ++p) {
    Morphism c = h.component(1, *s, p);
    out.parts.emplace_back(f.source().at(p), f.target().at(p + 1), c.matrix());
  }
  if (!out.verify(top)) throw ValidationError("homotopy solver produced a non-solution");
  return out;
}

std::optional<ChainMap> solve_lift(const ChainMap& f, const ChainMap& phi, std::mt19937_64* rng) {
  if (f.target() != phi.target()) throw EndpointMismatch("lift: maps into different complexes");
  const Complex& x = f.source();
  HomComplex hg(x, phi.source()), hm(x, phi.target());
  if (hg.complex().empty()) {
    if (!f.is_zero()) return std::nullopt;
    return ChainMap::zero(x, phi.source());
  }
  ChainMap post = hom_postcompose(hg, hm, phi);
  Module h0 = hg.complex().at(0), h1 = hg.complex().at(-1), m0 = hm.complex().at(0);
  Morphism a = block_morphism({h1, m0}, {h0}, {{hg.complex().d(0)}, {post.at(0)}});
  Vec rhs = vec_concat(Vec(static_cast<std::size_t>(h1.gens()), 0), hm.from_chain_map(f));
  auto sol = preimage(a, rhs);
  if (!sol) return std::nullopt;
  Vec e = *sol;
  if (rng) {
    const Ring& r = x.ring();
    Kernel k = kernel(a);
    for (int j = 0; j < k.module.gens(); ++j) {
      Elem c = r.is_finite() ? static_cast<Elem>((*rng)() % static_cast<std::uint64_t>(r.size()))
                             : static_cast<Elem>((*rng)() % 5) - 2;
      e = vec_add(r, e, vec_scale(r, c, k.inclusion.matrix().col(j)));
    }
    e = h0.reduce(e);
  }
  ChainMap h = hg.to_chain_map(e);
  if (compose(phi, h) != f) throw ValidationError("lift solver produced a non-solution");
  return h;
}

std::optional<Morphism> extend_along(const Morphism& a, const Morphism& b) {
  if (a.source() != b.source()) throw EndpointMismatch("extension problem with different sources");
  HomSpace bq(b.target(), a.target()), aq(a.source(), a.target());
  Morphism pre = precompose_map(bq, aq, b);
  auto sol = preimage(pre, aq.to_element(a));
  if (!sol) return std::nullopt;
  return bq.to_morphism(*sol);
}

std::string to_string(StructuralClass c) {
  switch (c) {
    case StructuralClass::dg_projective: return "dg_projective";
    case StructuralClass::dg_flat: return "dg_flat";
    case StructuralClass::dg_injective: return "dg_injective";
    case StructuralClass::projective_complex: return "projective_complex";
    case StructuralClass::flat_complex: return "flat_complex";
  }
  return "?";
}

StructuralClass structural_class_from_string(const std::string& s) {
  for (auto c : {StructuralClass::dg_projective, StructuralClass::dg_flat,
                 StructuralClass::dg_injective, StructuralClass::projective_complex,
                 StructuralClass::flat_complex})
    if (to_string(c) == s) return c;
  throw ParseError("unknown structural class '" + s + "'");
}

StructuralVerdict structural_class(const Complex& c, StructuralClass k) {
  ClassName termwise = ClassName::projective;
  if (k == StructuralClass::dg_flat || k == StructuralClass::flat_complex) termwise = ClassName::flat;
  if (k == StructuralClass::dg_injective) termwise = ClassName::injective;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    auto m = class_membership(c.at(n), termwise);
    if (!m.member)
      return {false, "component " + std::to_string(n) + " is not " + to_string(termwise) + ": " +
                         m.certificate};
  }
  if (k == StructuralClass::dg_projective || k == StructuralClass::dg_flat ||
      k == StructuralClass::dg_injective)
    return {true, "finite support complex of " + to_string(termwise) + " modules"};
  ExtInt s = sup_h(c);
  if (!s.is_neg_inf()) return {false, "not exact: H_" + s.to_string() + " is nonzero"};
  for (int n = c.lo(); n <= c.hi(); ++n) {
    Module z = cycles(c, n).module;
    auto m = class_membership(z, termwise);
    if (!m.member)
      return {false, "cycle module Z_" + std::to_string(n) + " = " + z.to_string() + " is not " +
                         to_string(termwise)};
  }
  return {true, "exact with " + to_string(termwise) + " components and cycles"};
}

}  // namespace gfd
