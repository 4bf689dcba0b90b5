#include "gfd/matrix.hpp"

#include <sstream>

namespace gfd {

Matrix::Matrix(Ring ring, int rows, int cols, Vec entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw DimensionMismatch("matrix entry count " + std::to_string(data_.size()) +
                            " does not match " + std::to_string(rows) + "x" +
                            std::to_string(cols));
}

Matrix Matrix::identity(const Ring& r, int n) {
  Matrix m(r, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Ring& r, const Vec& v) {
  return Matrix(r, static_cast<int>(v.size()), 1, v);
}

Matrix Matrix::diagonal(const Ring& r, const Vec& d) {
  int n = static_cast<int>(d.size());
  Matrix m(r, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
  return m;
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(int i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
             data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

void Matrix::set_col(int j, const Vec& v) {
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw DimensionMismatch("cannot multiply " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " by " + std::to_string(o.rows_) +
                            "x" + std::to_string(o.cols_));
  Matrix out(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Elem a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        Elem b = o.at(k, j);
        if (b == 0) continue;
        out.at(i, j) = ring_.add(out.at(i, j), ring_.mul(a, b));
      }
    }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionMismatch("vector length does not match matrix columns");
  Vec out(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Elem a = at(i, k);
      if (a == 0 || v[k] == 0) continue;
      out[i] = ring_.add(out[i], ring_.mul(a, v[k]));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.sub(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.neg(data_[i]);
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.mul(c, data_[i]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (Elem e : data_)
    if (e != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix out(ring_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

Matrix Matrix::select_cols(const std::vector<int>& idx) const {
  Matrix out(ring_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return out;
}

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
  Matrix out(ring_, static_cast<int>(idx.size()), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) out.at(static_cast<int>(i), j) = at(idx[i], j);
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  Matrix out(a.ring(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) out << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) out << " ";
      out << ring_.format(at(i, j));
    }
  }
  out << "]";
  return out.str();
}

Vec vec_add(const Ring& r, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const Ring& r, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const Ring& r, Elem c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.mul(c, a[i]);
  return out;
}

bool vec_is_zero(const Vec& a) {
  for (Elem e : a)
    if (e != 0) return false;
  return true;
}

Vec vec_concat(const Vec& a, const Vec& b) {
  Vec out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace gfd
