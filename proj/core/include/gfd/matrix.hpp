#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "gfd/errors.hpp"
#include "gfd/ring.hpp"

namespace gfd {

/// Dense row-major matrix over one local ring factor.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, 0) {}
  Matrix(Ring ring, int rows, int cols, Vec entries);

  static Matrix identity(const Ring& r, int n);
  static Matrix zero(const Ring& r, int rows, int cols) { return Matrix(r, rows, cols); }
  static Matrix column(const Ring& r, const Vec& v);
  static Matrix diagonal(const Ring& r, const Vec& d);

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Vec& data() const { return data_; }

  Elem& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  Elem at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Vec col(int j) const;
  Vec row(int i) const;
  void set_col(int j, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(Elem c) const;
  bool operator==(const Matrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& b);
  Matrix select_cols(const std::vector<int>& idx) const;
  Matrix select_rows(const std::vector<int>& idx) const;

  /// [A | B]
  static Matrix hstack(const Matrix& a, const Matrix& b);
  /// [A ; B]
  static Matrix vstack(const Matrix& a, const Matrix& b);
  /// diag(A, B)
  static Matrix block_diag(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Ring ring_ = Ring::integers();
  int rows_ = 0;
  int cols_ = 0;
  Vec data_;
};

Vec vec_add(const Ring& r, const Vec& a, const Vec& b);
Vec vec_sub(const Ring& r, const Vec& a, const Vec& b);
Vec vec_scale(const Ring& r, Elem c, const Vec& a);
bool vec_is_zero(const Vec& a);
Vec vec_concat(const Vec& a, const Vec& b);

}  // namespace gfd
