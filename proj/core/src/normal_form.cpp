#include "gfd/normal_form.hpp"

#include <utility>

namespace gfd {

namespace {

// Elementary operations applied simultaneously to A and the transforms.
// Row ops act on U (left) and inversely on Uinv (right); column ops act on
// V (right) and inversely on Vinv (left).
class Reducer {
 public:
  explicit Reducer(const Matrix& a)
      : r_(a.ring()), A(a), U(Matrix::identity(a.ring(), a.rows())),
        Uinv(Matrix::identity(a.ring(), a.rows())),
        V(Matrix::identity(a.ring(), a.cols())),
        Vinv(Matrix::identity(a.ring(), a.cols())) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
    for (int c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
    for (int r = 0; r < Uinv.rows(); ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
    for (int r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
    for (int c = 0; c < Vinv.cols(); ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
  }

  // row_i *= u
  void scale_row(int i, Elem u) {
    if (u == 1) return;
    Elem ui = r_.inverse(u);
    for (int c = 0; c < A.cols(); ++c) A.at(i, c) = r_.mul(u, A.at(i, c));
    for (int c = 0; c < U.cols(); ++c) U.at(i, c) = r_.mul(u, U.at(i, c));
    for (int r = 0; r < Uinv.rows(); ++r) Uinv.at(r, i) = r_.mul(Uinv.at(r, i), ui);
  }

  // row_i += c * row_j
  void add_row(int i, int j, Elem c) {
    if (c == 0) return;
    for (int k = 0; k < A.cols(); ++k)
      if (A.at(j, k)) A.at(i, k) = r_.add(A.at(i, k), r_.mul(c, A.at(j, k)));
    for (int k = 0; k < U.cols(); ++k)
      if (U.at(j, k)) U.at(i, k) = r_.add(U.at(i, k), r_.mul(c, U.at(j, k)));
    for (int r = 0; r < Uinv.rows(); ++r)
      if (Uinv.at(r, i)) Uinv.at(r, j) = r_.sub(Uinv.at(r, j), r_.mul(Uinv.at(r, i), c));
  }

  // col_i += c * col_j
  void add_col(int i, int j, Elem c) {
    if (c == 0) return;
    for (int k = 0; k < A.rows(); ++k)
      if (A.at(k, j)) A.at(k, i) = r_.add(A.at(k, i), r_.mul(c, A.at(k, j)));
    for (int k = 0; k < V.rows(); ++k)
      if (V.at(k, j)) V.at(k, i) = r_.add(V.at(k, i), r_.mul(c, V.at(k, j)));
    for (int k = 0; k < Vinv.cols(); ++k)
      if (Vinv.at(i, k)) Vinv.at(j, k) = r_.sub(Vinv.at(j, k), r_.mul(c, Vinv.at(i, k)));
  }

  // Position of the nonzero entry with the smallest pivot key in the
  // trailing submatrix starting at (t, t).
  bool find_pivot(int t, int& pi, int& pj) const {
    std::int64_t best = -1;
    for (int i = t; i < A.rows(); ++i)
      for (int j = t; j < A.cols(); ++j) {
        Elem a = A.at(i, j);
        if (a == 0) continue;
        std::int64_t key = r_.pivot_key(a);
        if (best < 0 || key < best) {
          best = key;
          pi = i;
          pj = j;
          if ((r_.is_finite() && key == 0) || (!r_.is_finite() && key == 1)) return true;
        }
      }
    return best >= 0;
  }

  int reduce_chain() {
    int m = A.rows(), n = A.cols(), t = 0;
    for (; t < std::min(m, n); ++t) {
      int pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      auto [canon, unit] = r_.associate(A.at(t, t));
      (void)canon;
      scale_row(t, r_.inverse(unit));
      Elem piv = A.at(t, t);
      for (int i = t + 1; i < m; ++i)
        if (A.at(i, t)) add_row(i, t, r_.neg(r_.exact_div(A.at(i, t), piv)));
      for (int j = t + 1; j < n; ++j)
        if (A.at(t, j)) add_col(j, t, r_.neg(r_.exact_div(A.at(t, j), piv)));
    }
    return t;
  }

  int reduce_integers() {
    int m = A.rows(), n = A.cols(), t = 0;
    for (; t < std::min(m, n); ++t) {
      int pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      for (;;) {
        swap_rows(t, pi);
        swap_cols(t, pj);
        Elem piv = A.at(t, t);
        bool residue = false;
        for (int i = t + 1; i < m; ++i) {
          if (!A.at(i, t)) continue;
          add_row(i, t, -(A.at(i, t) / piv));
          residue = residue || A.at(i, t) != 0;
        }
        for (int j = t + 1; j < n; ++j) {
          if (!A.at(t, j)) continue;
          add_col(j, t, -(A.at(t, j) / piv));
          residue = residue || A.at(t, j) != 0;
        }
        if (!residue) {
          // Row and column are clear; enforce divisibility of the rest.
          int bad = -1;
          for (int i = t + 1; i < m && bad < 0; ++i)
            for (int j = t + 1; j < n; ++j)
              if (A.at(i, j) % piv != 0) {
                bad = i;
                break;
              }
          if (bad < 0) break;
          add_row(t, bad, 1);
        }
        find_pivot(t, pi, pj);
      }
      if (A.at(t, t) < 0) scale_row(t, -1);
    }
    return t;
  }

  const Ring& r_;
  Matrix A, U, Uinv, V, Vinv;
};

}  // namespace

DiagonalReport matrix_normal_form(const Matrix& A) {
  Reducer red(A);
  int rank = A.ring().is_finite() ? red.reduce_chain() : red.reduce_integers();
  DiagonalReport rep{A, red.U, red.Uinv, red.V, red.Vinv, red.A, {}, rank};
  int k = std::min(A.rows(), A.cols());
  rep.diagonal.resize(k);
  for (int i = 0; i < k; ++i) rep.diagonal[i] = rep.D.at(i, i);
  return rep;
}

std::vector<DiagonalReport> matrix_normal_form(const std::vector<Matrix>& per_factor) {
  std::vector<DiagonalReport> out;
  out.reserve(per_factor.size());
  for (const auto& m : per_factor) out.push_back(matrix_normal_form(m));
  return out;
}

bool DiagonalReport::verify() const {
  const Ring& r = A.ring();
  if (U * A * V != D) return false;
  if (U * Uinv != Matrix::identity(r, A.rows())) return false;
  if (Uinv * U != Matrix::identity(r, A.rows())) return false;
  if (V * Vinv != Matrix::identity(r, A.cols())) return false;
  if (Vinv * V != Matrix::identity(r, A.cols())) return false;
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j)
      if (i != j && D.at(i, j) != 0) return false;
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    if (r.canonical(diagonal[i]) != diagonal[i]) return false;
    if (i + 1 < diagonal.size() && !r.divides(diagonal[i], diagonal[i + 1])) return false;
  }
  return true;
}

LinearSolver::LinearSolver(const Matrix& A) : nf_(matrix_normal_form(A)) {}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
  const Ring& r = nf_.A.ring();
  if (static_cast<int>(b.size()) != nf_.A.rows())
    throw DimensionMismatch("right-hand side length does not match system rows");
  Vec c = nf_.U * b;
  Vec y(nf_.A.cols(), 0);
  for (int i = 0; i < nf_.A.rows(); ++i) {
    if (i < nf_.rank) {
      if (!r.divides(nf_.diagonal[i], c[i])) return std::nullopt;
      y[i] = r.exact_div(c[i], nf_.diagonal[i]);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return nf_.V * y;
}

Matrix LinearSolver::kernel() const {
  const Ring& r = nf_.A.ring();
  std::vector<Vec> gens;
  for (int i = 0; i < nf_.A.cols(); ++i) {
    Elem scale = i < nf_.rank ? r.annihilator(nf_.diagonal[i]) : 1;
    if (scale == 0) continue;
    gens.push_back(vec_scale(r, scale, nf_.V.col(i)));
  }
  Matrix K(r, nf_.A.cols(), static_cast<int>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) K.set_col(static_cast<int>(j), gens[j]);
  return K;
}

}  // namespace gfd
