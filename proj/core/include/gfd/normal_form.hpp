#pragma once

#include <optional>
#include <vector>

#include "gfd/matrix.hpp"

namespace gfd {

/// U * A * V == D with D diagonal, diagonal entries canonical and each one
/// dividing the next. Uinv and Vinv are explicit inverses.
struct DiagonalReport {
  Matrix A, U, Uinv, V, Vinv, D;
  Vec diagonal;  // length min(rows, cols)
  int rank = 0;  // number of nonzero diagonal entries (they come first)

  /// Re-multiplies everything and checks the identities exactly.
  bool verify() const;
};

/// Diagonal normal form over a single local factor. Chain rings are reduced
/// directly (minimal-valuation pivots); the integers use Euclidean pivoting.
DiagonalReport matrix_normal_form(const Matrix& A);

/// Factorwise normal form for a matrix over a decomposed catalog ring.
std::vector<DiagonalReport> matrix_normal_form(const std::vector<Matrix>& per_factor);

/// Solves A x = b and enumerates generators of ker A, reusing one normal form.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& A);

  std::optional<Vec> solve(const Vec& b) const;
  /// Columns generate { x : A x = 0 }.
  Matrix kernel() const;
  const DiagonalReport& report() const { return nf_; }
  int rows() const { return nf_.A.rows(); }
  int cols() const { return nf_.A.cols(); }

 private:
  DiagonalReport nf_;
};

}  // namespace gfd
