#include "gfd/module.hpp"

#include <algorithm>
#include <sstream>

namespace gfd {

Module::Module(Ring ring, Vec orders) : ring_(std::move(ring)), orders_(std::move(orders)) {
  for (Elem& a : orders_) {
    a = ring_.canonical(a);
    if (ring_.is_unit(a))
      throw ValidationError("module orders must be non-units; got " + ring_.format(a));
  }
}

bool Module::is_free() const {
  return std::all_of(orders_.begin(), orders_.end(), [](Elem a) { return a == 0; });
}

int Module::free_rank() const {
  return static_cast<int>(std::count(orders_.begin(), orders_.end(), 0));
}

Vec Module::torsion_invariants() const {
  Vec t;
  for (Elem a : orders_)
    if (a != 0) t.push_back(a);
  if (ring_.is_finite()) {
    std::sort(t.begin(), t.end(), [&](Elem x, Elem y) {
      return ring_.valuation(x) < ring_.valuation(y);
    });
    return t;
  }
  // Over the integers a direct sum of cyclics is not automatically in
  // divisibility order (Z/2 + Z/3 = Z/6), so renormalize.
  auto nf = matrix_normal_form(Matrix::diagonal(ring_, t));
  Vec out;
  for (Elem d : nf.diagonal)
    if (!ring_.is_unit(d)) out.push_back(d);
  return out;
}

Vec Module::invariants() const {
  Vec t = torsion_invariants();
  t.insert(t.end(), free_rank(), 0);
  return t;
}

std::int64_t Module::cardinality() const {
  if (!ring_.is_finite()) {
    if (orders_.empty()) return 1;
    if (!is_free()) {
      std::int64_t n = 1;
      for (Elem a : orders_) {
        if (a == 0) throw InfiniteRing("module over Z with a free summand is infinite");
        if (__builtin_mul_overflow(n, a, &n)) throw ArithmeticOverflow("cardinality overflow");
      }
      return n;
    }
    throw InfiniteRing("free module over Z is infinite");
  }
  std::int64_t n = 1;
  for (Elem a : orders_) {
    std::int64_t part = a == 0 ? ring_.size() : a;  // |R/(p^v)| = p^v in both chain kinds
    if (__builtin_mul_overflow(n, part, &n)) throw ArithmeticOverflow("cardinality overflow");
  }
  return n;
}

Vec Module::reduce(const Vec& x) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring_.reduce_mod(x[i], orders_[i]);
  return out;
}

std::string Module::to_string() const {
  if (orders_.empty()) return "0";
  std::ostringstream out;
  Vec inv = invariants();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) out << " + ";
    if (inv[i] == 0)
      out << "R";
    else
      out << "R/(" << ring_.format(inv[i]) << ")";
  }
  return out.str();
}

Module direct_sum(const Module& a, const Module& b) {
  return Module(a.ring(), vec_concat(a.orders(), b.orders()));
}

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw DimensionMismatch("direct sum of no modules needs a ring");
  Vec o;
  for (const auto& p : parts) o = vec_concat(o, p.orders());
  return Module(parts.front().ring(), o);
}

bool is_isomorphic(const Module& a, const Module& b) {
  if (a.ring() != b.ring()) throw RingMismatch("modules live over different rings");
  return a.invariants() == b.invariants();
}

Morphism::Morphism(Module source, Module target, Matrix m)
    : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(m)) {
  if (src_.ring() != tgt_.ring() || m_.ring() != src_.ring())
    throw RingMismatch("morphism data over different rings");
  if (m_.rows() != tgt_.gens() || m_.cols() != src_.gens())
    throw DimensionMismatch("morphism matrix is " + std::to_string(m_.rows()) + "x" +
                            std::to_string(m_.cols()) + ", expected " +
                            std::to_string(tgt_.gens()) + "x" + std::to_string(src_.gens()));
  const Ring& r = src_.ring();
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) {
      Elem& e = m_.at(i, j);
      e = r.reduce_mod(e, tgt_.orders()[i]);
      if (r.reduce_mod(r.mul(src_.orders()[j], e), tgt_.orders()[i]) != 0)
        throw ValidationError("morphism does not respect relations at generator " +
                              std::to_string(j));
    }
}

Morphism Morphism::identity(const Module& m) {
  return Morphism(m, m, Matrix::identity(m.ring(), m.gens()));
}

Morphism Morphism::zero(const Module& s, const Module& t) {
  return Morphism(s, t, Matrix(s.ring(), t.gens(), s.gens()));
}

Morphism Morphism::operator+(const Morphism& o) const { return Morphism(src_, tgt_, m_ + o.m_); }
Morphism Morphism::operator-(const Morphism& o) const { return Morphism(src_, tgt_, m_ - o.m_); }
Morphism Morphism::operator-() const { return Morphism(src_, tgt_, -m_); }
Morphism Morphism::scaled(Elem c) const { return Morphism(src_, tgt_, m_.scaled(c)); }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.source() != f.target()) throw DimensionMismatch("composition of incompatible morphisms");
  return Morphism(f.source(), g.target(), g.matrix() * f.matrix());
}

Morphism direct_sum(const Morphism& f, const Morphism& g) {
  return Morphism(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()),
                  Matrix::block_diag(f.matrix(), g.matrix()));
}

Morphism block_morphism(const std::vector<Module>& targets, const std::vector<Module>& sources,
                        const std::vector<std::vector<Morphism>>& blocks) {
  const Ring& r = targets.empty() ? sources.front().ring() : targets.front().ring();
  int rows = 0, cols = 0;
  for (const auto& t : targets) rows += t.gens();
  for (const auto& s : sources) cols += s.gens();
  Matrix m(r, rows, cols);
  int r0 = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    int c0 = 0;
    for (std::size_t j = 0; j < sources.size(); ++j) {
      m.set_block(r0, c0, blocks[i][j].matrix());
      c0 += sources[j].gens();
    }
    r0 += targets[i].gens();
  }
  Vec to, so;
  for (const auto& t : targets) to = vec_concat(to, t.orders());
  for (const auto& s : sources) so = vec_concat(so, s.orders());
  return Morphism(Module(r, so), Module(r, to), m);
}

Morphism block_of(const Morphism& f, const std::vector<Module>& targets,
                  const std::vector<Module>& sources, int i, int j) {
  int r0 = 0, c0 = 0;
  for (int k = 0; k < i; ++k) r0 += targets[k].gens();
  for (int k = 0; k < j; ++k) c0 += sources[k].gens();
  return Morphism(sources[j], targets[i],
                  f.matrix().block(r0, c0, targets[i].gens(), sources[j].gens()));
}

namespace {

bool is_diagonal_shape(const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j && a.at(i, j) != 0) return false;
  return true;
}

}  // namespace

Presented present_module(const Matrix& A) {
  const Ring& r = A.ring();
  int rows = A.rows();
  if (is_diagonal_shape(A)) {
    Vec orders;
    std::vector<int> kept;
    for (int i = 0; i < rows; ++i) {
      Elem d = i < A.cols() ? r.canonical(A.at(i, i)) : 0;
      if (r.is_unit(d)) continue;
      kept.push_back(i);
      orders.push_back(d);
    }
    Module m(r, orders);
    Matrix id = Matrix::identity(r, rows);
    Matrix to = id.select_rows(kept), from = id.select_cols(kept);
    for (int i = 0; i < to.rows(); ++i)
      for (int j = 0; j < to.cols(); ++j) to.at(i, j) = r.reduce_mod(to.at(i, j), orders[i]);
    return {m, to, from};
  }
  auto nf = matrix_normal_form(A);
  Vec orders;
  std::vector<int> kept;
  for (int i = 0; i < rows; ++i) {
    Elem d = i < nf.rank ? nf.diagonal[i] : 0;
    if (r.is_unit(d)) continue;
    kept.push_back(i);
    orders.push_back(d);
  }
  Module m(r, orders);
  Matrix to = nf.U.select_rows(kept);
  for (int i = 0; i < to.rows(); ++i)
    for (int j = 0; j < to.cols(); ++j) to.at(i, j) = r.reduce_mod(to.at(i, j), orders[i]);
  return {m, to, nf.Uinv.select_cols(kept)};
}

Subquotient::Subquotient(const Matrix& S, const Matrix& T)
    : s_cols_(S.cols()), st_(Matrix::hstack(S, T)) {
  const Ring& r = S.ring();
  Matrix K = st_.kernel();
  Matrix W = K.block(0, 0, S.cols(), K.cols());
  auto nf = matrix_normal_form(W);
  Vec orders;
  std::vector<int> kept;
  for (int i = 0; i < S.cols(); ++i) {
    Elem d = i < nf.rank ? nf.diagonal[i] : 0;
    if (r.is_unit(d)) continue;
    kept.push_back(i);
    orders.push_back(d);
  }
  module_ = Module(r, orders);
  gens_ = S * nf.Uinv.select_cols(kept);
  ukept_ = nf.U.select_rows(kept);
}

Vec Subquotient::coords_from_s(const Vec& w) const { return module_.reduce(ukept_ * w); }

Vec Subquotient::coords(const Vec& x) const {
  auto sol = st_.solve(x);
  if (!sol) throw ValidationError("vector does not lie in the subquotient's numerator");
  Vec w(sol->begin(), sol->begin() + s_cols_);
  return coords_from_s(w);
}

namespace {

// Generators (columns) of { x in R^{g_M} : F x = 0 in N }.
Matrix kernel_vectors(const Morphism& f) {
  LinearSolver s(Matrix::hstack(f.matrix(), f.target().relations()));
  Matrix K = s.kernel();
  return K.block(0, 0, f.source().gens(), K.cols());
}

Morphism from_generators(const Module& sub, const Module& ambient, const Matrix& gens) {
  return Morphism(sub, ambient, gens);
}

}  // namespace

Kernel kernel(const Morphism& f) {
  Subquotient sq(kernel_vectors(f), f.source().relations());
  Module m = sq.module();
  return {m, from_generators(m, f.source(), sq.generators()), std::move(sq)};
}

Image image(const Morphism& f) {
  Subquotient sq(f.matrix(), f.target().relations());
  Module m = sq.module();
  return {m, from_generators(m, f.target(), sq.generators()), std::move(sq)};
}

Cokernel cokernel(const Morphism& f) {
  const Ring& r = f.ring();
  int g = f.target().gens();
  Subquotient sq(Matrix::identity(r, g), Matrix::hstack(f.matrix(), f.target().relations()));
  Module m = sq.module();
  Matrix p(r, m.gens(), g);
  for (int i = 0; i < g; ++i) {
    Vec e(g, 0);
    e[i] = 1;
    Vec c = sq.coords(e);
    for (int k = 0; k < m.gens(); ++k) p.at(k, i) = c[k];
  }
  return {m, Morphism(f.target(), m, p), std::move(sq)};
}

Homology homology(const Morphism& f, const Morphism& g) {
  if (f.target() != g.source()) throw DimensionMismatch("homology of non-composable maps");
  Subquotient sq(kernel_vectors(g), Matrix::hstack(g.source().relations(), f.matrix()));
  Module m = sq.module();
  return {m, std::move(sq)};
}

std::optional<Vec> preimage(const Morphism& f, const Vec& y) {
  LinearSolver s(Matrix::hstack(f.matrix(), f.target().relations()));
  auto sol = s.solve(y);
  if (!sol) return std::nullopt;
  Vec x(sol->begin(), sol->begin() + f.source().gens());
  return f.source().reduce(x);
}

bool is_injective(const Morphism& f) { return kernel(f).module.is_zero(); }
bool is_surjective(const Morphism& f) { return cokernel(f).module.is_zero(); }
bool is_isomorphism(const Morphism& f) { return is_injective(f) && is_surjective(f); }

bool is_exact_at(const Morphism& f, const Morphism& g) {
  if (!compose(g, f).is_zero()) return false;
  return homology(f, g).module.is_zero();
}

HomSpace::HomSpace(Module source, Module target)
    : src_(std::move(source)), tgt_(std::move(target)) {
  if (src_.ring() != tgt_.ring()) throw RingMismatch("Hom between modules over different rings");
  const Ring& r = src_.ring();
  Vec orders;
  for (int i = 0; i < tgt_.gens(); ++i)
    for (int j = 0; j < src_.gens(); ++j) {
      auto [gen, order] = r.hom_cyclic(src_.orders()[j], tgt_.orders()[i]);
      if (r.is_unit(order)) continue;
      slots_.push_back({i, j, gen});
      orders.push_back(order);
    }
  module_ = Module(r, orders);
}

Morphism HomSpace::to_morphism(const Vec& e) const {
  const Ring& r = src_.ring();
  Matrix m(r, tgt_.gens(), src_.gens());
  for (std::size_t s = 0; s < slots_.size(); ++s)
    m.at(slots_[s].row, slots_[s].col) = r.mul(slots_[s].generator, e[s]);
  return Morphism(src_, tgt_, m);
}

Vec HomSpace::to_element(const Matrix& m) const {
  const Ring& r = src_.ring();
  Vec e(slots_.size(), 0);
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    Elem v = r.reduce_mod(m.at(slots_[s].row, slots_[s].col), tgt_.orders()[slots_[s].row]);
    e[s] = r.exact_div(v, slots_[s].generator);
  }
  return module_.reduce(e);
}

Vec HomSpace::to_element(const Morphism& f) const { return to_element(f.matrix()); }

Morphism precompose_map(const HomSpace& from, const HomSpace& to, const Morphism& f) {
  const Ring& r = f.ring();
  int n = from.module().gens();
  Matrix m(r, to.module().gens(), n);
  for (int s = 0; s < n; ++s) {
    Vec e(n, 0);
    e[s] = 1;
    Morphism g = from.to_morphism(e);
    m.set_col(s, to.to_element(g.matrix() * f.matrix()));
  }
  return Morphism(from.module(), to.module(), m);
}

Morphism postcompose_map(const HomSpace& from, const HomSpace& to, const Morphism& g) {
  const Ring& r = g.ring();
  int n = from.module().gens();
  Matrix m(r, to.module().gens(), n);
  for (int s = 0; s < n; ++s) {
    Vec e(n, 0);
    e[s] = 1;
    Morphism h = from.to_morphism(e);
    m.set_col(s, to.to_element(g.matrix() * h.matrix()));
  }
  return Morphism(from.module(), to.module(), m);
}

TensorSpace::TensorSpace(Module left, Module right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.ring() != right_.ring()) throw RingMismatch("tensor over different rings");
  const Ring& r = left_.ring();
  Vec orders;
  index_.assign(static_cast<std::size_t>(left_.gens()) * right_.gens(), -1);
  for (int i = 0; i < left_.gens(); ++i)
    for (int j = 0; j < right_.gens(); ++j) {
      Elem g = r.gcd(left_.orders()[i], right_.orders()[j]);
      if (r.is_unit(g)) continue;
      index_[static_cast<std::size_t>(i) * right_.gens() + j] = static_cast<int>(orders.size());
      orders.push_back(g);
    }
  module_ = Module(r, orders);
}

Morphism tensor_map(const TensorSpace& from, const TensorSpace& to, const Morphism& f,
                    const Morphism& g) {
  const Ring& r = f.ring();
  Matrix m(r, to.module().gens(), from.module().gens());
  for (int i = 0; i < from.left().gens(); ++i)
    for (int j = 0; j < from.right().gens(); ++j) {
      int col = from.index(i, j);
      if (col < 0) continue;
      for (int k = 0; k < to.left().gens(); ++k) {
        Elem a = f.matrix().at(k, i);
        if (a == 0) continue;
        for (int l = 0; l < to.right().gens(); ++l) {
          Elem b = g.matrix().at(l, j);
          int row = to.index(k, l);
          if (b == 0 || row < 0) continue;
          m.at(row, col) = r.add(m.at(row, col), r.mul(a, b));
        }
      }
    }
  return Morphism(from.module(), to.module(), m);
}

HomSpace ring_dual_space(const Module& m) { return HomSpace(m, Module::free(m.ring(), 1)); }

Module ring_dual(const Module& m) { return ring_dual_space(m).module(); }

Morphism ring_dual(const Morphism& f) {
  return precompose_map(ring_dual_space(f.target()), ring_dual_space(f.source()), f);
}

Module character_dual(const Module& m) {
  if (!m.ring().is_finite())
    throw InfiniteRing("character dual is only available over finite rings (got " +
                       m.ring().name() + ")");
  return ring_dual(m);
}

Morphism character_dual(const Morphism& f) {
  if (!f.ring().is_finite())
    throw InfiniteRing("character dual is only available over finite rings (got " +
                       f.ring().name() + ")");
  return ring_dual(f);
}

Morphism double_dual_map(const Module& m) {
  const Ring& r = m.ring();
  HomSpace d = ring_dual_space(m);
  HomSpace dd = ring_dual_space(d.module());
  Matrix out(r, dd.module().gens(), m.gens());
  for (int j = 0; j < m.gens(); ++j) {
    Matrix eval(r, 1, d.module().gens());
    for (std::size_t s = 0; s < d.slots().size(); ++s)
      if (d.slots()[s].col == j) eval.at(0, static_cast<int>(s)) = d.slots()[s].generator;
    out.set_col(j, dd.to_element(eval));
  }
  return Morphism(m, dd.module(), out);
}

Morphism free_cover(const Module& m) {
  return Morphism(Module::free(m.ring(), m.gens()), m, Matrix::identity(m.ring(), m.gens()));
}

}  // namespace gfd
