#include "gfd/complex.hpp"

#include <algorithm>
#include <sstream>

namespace gfd {

Complex::Complex(Ring ring, int lo, std::vector<Module> modules, std::vector<Morphism> diffs)
    : ring_(std::move(ring)), lo_(lo), modules_(std::move(modules)), diffs_(std::move(diffs)) {
  if (diffs_.size() + 1 == modules_.size() && !modules_.empty())
    diffs_.insert(diffs_.begin(), Morphism::zero(modules_.front(), Module::zero(ring_)));
  if (diffs_.size() != modules_.size())
    throw DimensionMismatch("complex needs one differential per degree");
  for (std::size_t i = 0; i < modules_.size(); ++i) {
    int n = lo_ + static_cast<int>(i);
    if (modules_[i].ring() != ring_) throw RingMismatch("complex component over another ring");
    const Morphism& dn = diffs_[i];
    Module below = i == 0 ? Module::zero(ring_) : modules_[i - 1];
    if (dn.source() != modules_[i] || dn.target() != below)
      throw DimensionMismatch("differential d_" + std::to_string(n) + " has wrong endpoints");
    if (i > 0 && !compose(diffs_[i - 1], dn).is_zero())
      throw NotAComplex("NotAComplex at degree " + std::to_string(n));
  }
}

Complex Complex::concentrated(const Module& m, int degree) {
  return Complex(m.ring(), degree, {m}, {Morphism::zero(m, Module::zero(m.ring()))});
}

Module Complex::at(int n) const {
  if (n < lo_ || n > hi()) return Module::zero(ring_);
  return modules_[static_cast<std::size_t>(n - lo_)];
}

Morphism Complex::d(int n) const {
  if (n < lo_ || n > hi()) return Morphism::zero(at(n), at(n - 1));
  return diffs_[static_cast<std::size_t>(n - lo_)];
}

Complex Complex::trimmed() const {
  int a = lo_, b = hi();
  while (a <= b && at(a).is_zero()) ++a;
  while (b >= a && at(b).is_zero()) --b;
  if (a > b) return zero(ring_);
  std::vector<Module> mods;
  std::vector<Morphism> ds;
  for (int n = a; n <= b; ++n) {
    mods.push_back(at(n));
    ds.push_back(n == a ? Morphism::zero(at(n), Module::zero(ring_)) : d(n));
  }
  return Complex(ring_, a, mods, ds);
}

bool Complex::is_zero() const {
  return std::all_of(modules_.begin(), modules_.end(), [](const Module& m) { return m.is_zero(); });
}

std::string Complex::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (int n = hi(); n >= lo_; --n) {
    out << "[" << n << "] " << at(n).to_string();
    if (n > lo_) out << " -> ";
  }
  return out.str();
}

bool Complex::operator==(const Complex& o) const {
  if (ring_ != o.ring_) return false;
  Complex a = trimmed(), b = o.trimmed();
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
  for (int n = a.lo(); n <= a.hi(); ++n)
    if (a.at(n) != b.at(n) || a.d(n) != b.d(n)) return false;
  return true;
}

ChainMap::ChainMap(Complex source, Complex target, int lo, std::vector<Morphism> parts)
    : src_(std::move(source)), tgt_(std::move(target)), lo_(lo), parts_(std::move(parts)) {
  int a = std::min(src_.lo(), tgt_.lo()), b = std::max(src_.hi(), tgt_.hi());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    int n = lo_ + static_cast<int>(i);
    if (parts_[i].source() != src_.at(n) || parts_[i].target() != tgt_.at(n))
      throw DimensionMismatch("chain map part f_" + std::to_string(n) + " has wrong endpoints");
  }
  for (int n = a; n <= b + 1; ++n) {
    Morphism lhs = compose(tgt_.d(n), at(n));
    Morphism rhs = compose(at(n - 1), src_.d(n));
    if (lhs != rhs)
      throw ValidationError("chain map does not commute with differentials at degree " +
                            std::to_string(n));
  }
}

ChainMap ChainMap::identity(const Complex& c) {
  std::vector<Morphism> parts;
  for (int n = c.lo(); n <= c.hi(); ++n) parts.push_back(Morphism::identity(c.at(n)));
  return ChainMap(c, c, c.lo(), parts);
}

ChainMap ChainMap::zero(const Complex& s, const Complex& t) { return ChainMap(s, t, 0, {}); }

Morphism ChainMap::at(int n) const {
  int i = n - lo_;
  if (i < 0 || i >= static_cast<int>(parts_.size()))
    return Morphism::zero(src_.at(n), tgt_.at(n));
  return parts_[static_cast<std::size_t>(i)];
}

namespace {

int map_lo(const Complex& s, const Complex& t) { return std::min(s.lo(), t.lo()); }
int map_hi(const Complex& s, const Complex& t) { return std::max(s.hi(), t.hi()); }

template <class Op>
ChainMap combine_maps(const ChainMap& a, const ChainMap& b, Op op) {
  if (a.source() != b.source() || a.target() != b.target())
    throw EndpointMismatch("chain maps have different endpoints");
  int lo = map_lo(a.source(), a.target()), hi = map_hi(a.source(), a.target());
  std::vector<Morphism> parts;
  for (int n = lo; n <= hi; ++n) parts.push_back(op(a.at(n), b.at(n)));
  return ChainMap(a.source(), a.target(), lo, parts);
}

}  // namespace

ChainMap ChainMap::operator+(const ChainMap& o) const {
  return combine_maps(*this, o, [](const Morphism& x, const Morphism& y) { return x + y; });
}

ChainMap ChainMap::operator-(const ChainMap& o) const {
  return combine_maps(*this, o, [](const Morphism& x, const Morphism& y) { return x - y; });
}

ChainMap ChainMap::operator-() const { return zero(src_, tgt_) - *this; }

bool ChainMap::operator==(const ChainMap& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_) return false;
  for (int n = map_lo(src_, tgt_); n <= map_hi(src_, tgt_); ++n)
    if (at(n) != o.at(n)) return false;
  return true;
}

bool ChainMap::is_zero() const {
  for (int n = map_lo(src_, tgt_); n <= map_hi(src_, tgt_); ++n)
    if (!at(n).is_zero()) return false;
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (f.target() != g.source()) throw EndpointMismatch("composition of incompatible chain maps");
  int lo = std::min(f.source().lo(), g.target().lo());
  int hi = std::max(f.source().hi(), g.target().hi());
  std::vector<Morphism> parts;
  for (int n = lo; n <= hi; ++n) parts.push_back(compose(g.at(n), f.at(n)));
  return ChainMap(f.source(), g.target(), lo, parts);
}

Morphism Homotopy::at(int n) const {
  int i = n - lo;
  if (i < 0 || i >= static_cast<int>(parts.size()))
    return Morphism::zero(f.source().at(n), f.target().at(n + 1));
  return parts[static_cast<std::size_t>(i)];
}

bool Homotopy::verify(std::optional<int> top) const {
  const Complex& x = f.source();
  const Complex& y = f.target();
  int hi = top ? *top : std::max(x.hi(), y.hi());
  for (int n = std::min(x.lo(), y.lo()); n <= hi; ++n) {
    Morphism lhs = f.at(n) - g.at(n);
    Morphism rhs = compose(y.d(n + 1), at(n)) + compose(at(n - 1), x.d(n));
    if (lhs != rhs) return false;
  }
  return true;
}

Complex shift(const Complex& c, int k) {
  if (c.empty()) return c;
  std::vector<Module> mods;
  std::vector<Morphism> ds;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    mods.push_back(c.at(n));
    ds.push_back(k % 2 == 0 ? c.d(n) : -c.d(n));
  }
  return Complex(c.ring(), c.lo() + k, mods, ds);
}

Complex truncate(const Complex& c, Truncation mode, int degree) {
  const Ring& r = c.ring();
  std::vector<Module> mods;
  std::vector<Morphism> ds;
  switch (mode) {
    case Truncation::hard_above:
    case Truncation::hard_below: {
      int a = mode == Truncation::hard_above ? c.lo() : std::max(c.lo(), degree);
      int b = mode == Truncation::hard_above ? std::min(c.hi(), degree) : c.hi();
      if (a > b) return Complex::zero(r);
      for (int n = a; n <= b; ++n) {
        mods.push_back(c.at(n));
        ds.push_back(n == a ? Morphism::zero(c.at(n), Module::zero(r)) : c.d(n));
      }
      return Complex(r, a, mods, ds);
    }
    case Truncation::soft_above: {
      if (degree < c.lo()) return Complex::zero(r);
      Cokernel top = cokernel(c.d(degree + 1));
      for (int n = c.lo(); n < degree; ++n) {
        mods.push_back(c.at(n));
        ds.push_back(n == c.lo() ? Morphism::zero(c.at(n), Module::zero(r)) : c.d(n));
      }
      // d_degree factors through the cokernel of d_{degree+1}
      Matrix m(r, c.at(degree - 1).gens(), top.module.gens());
      for (int j = 0; j < top.module.gens(); ++j)
        m.set_col(j, c.d(degree).apply(top.sq.generators().col(j)));
      mods.push_back(top.module);
      ds.push_back(degree == c.lo() ? Morphism::zero(top.module, Module::zero(r))
                                    : Morphism(top.module, c.at(degree - 1), m));
      return Complex(r, std::min(c.lo(), degree), mods, ds);
    }
    case Truncation::soft_below: {
      if (degree > c.hi()) return Complex::zero(r);
      Kernel z = kernel(c.d(degree));
      mods.push_back(z.module);
      ds.push_back(Morphism::zero(z.module, Module::zero(r)));
      for (int n = degree + 1; n <= c.hi(); ++n) {
        mods.push_back(c.at(n));
        if (n == degree + 1) {
          Matrix m(r, z.module.gens(), c.at(n).gens());
          for (int j = 0; j < c.at(n).gens(); ++j)
            m.set_col(j, z.sq.coords(c.d(n).matrix().col(j)));
          ds.push_back(Morphism(c.at(n), z.module, m));
        } else {
          ds.push_back(c.d(n));
        }
      }
      return Complex(r, degree, mods, ds);
    }
  }
  return c;
}

ChainMap hard_truncation_map(const Complex& c, int degree) {
  Complex t = truncate(c, Truncation::hard_above, degree);
  std::vector<Morphism> parts;
  for (int n = c.lo(); n <= c.hi(); ++n)
    parts.push_back(n <= degree ? Morphism::identity(c.at(n)) : Morphism::zero(c.at(n), t.at(n)));
  return ChainMap(c, t, c.lo(), parts);
}

ChainMap soft_truncation_map(const Complex& c, int degree) {
  Complex t = truncate(c, Truncation::soft_above, degree);
  Cokernel top = cokernel(c.d(degree + 1));
  std::vector<Morphism> parts;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    if (n < degree)
      parts.push_back(Morphism::identity(c.at(n)));
    else if (n == degree)
      parts.push_back(top.projection);
    else
      parts.push_back(Morphism::zero(c.at(n), t.at(n)));
  }
  return ChainMap(c, t, c.lo(), parts);
}

Homology homology_at(const Complex& c, int n) { return homology(c.d(n + 1), c.d(n)); }

ExtInt sup_h(const Complex& c) {
  for (int n = c.hi(); n >= c.lo(); --n)
    if (!homology_at(c, n).module.is_zero()) return n;
  return ExtInt::neg_inf();
}

ExtInt inf_h(const Complex& c) {
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (!homology_at(c, n).module.is_zero()) return n;
  return ExtInt::pos_inf();
}

bool is_exact(const Complex& c) { return sup_h(c).is_neg_inf(); }

Module boundary_cokernel(const Complex& c, int j) { return cokernel(c.d(j + 1)).module; }

Kernel cycles(const Complex& c, int j) { return kernel(c.d(j)); }

Morphism induced_map(const ChainMap& f, int n) {
  Homology hs = homology_at(f.source(), n);
  Homology ht = homology_at(f.target(), n);
  Morphism fn = f.at(n);
  Matrix m(f.source().ring(), ht.module.gens(), hs.module.gens());
  for (int j = 0; j < hs.module.gens(); ++j)
    m.set_col(j, ht.sq.coords(fn.matrix() * hs.sq.generators().col(j)));
  return Morphism(hs.module, ht.module, m);
}

}  // namespace gfd
