#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfd/extint.hpp"
#include "gfd/module.hpp"

namespace gfd {

/// A chain complex with finite support [lo, hi]. Degree n carries a module
/// C_n and a differential d_n: C_n -> C_{n-1}. Everything outside the
/// support is zero. An empty support is written lo > hi.
class Complex {
 public:
  Complex() = default;
  /// diffs[i] is d_{lo+i}; d_lo must map into the zero module (or the
  /// vector may be one shorter, in which case d_lo is filled in).
  Complex(Ring ring, int lo, std::vector<Module> modules, std::vector<Morphism> diffs);

  static Complex zero(const Ring& r) { return Complex(r, 0, {}, {}); }
  /// M placed in a single degree.
  static Complex concentrated(const Module& m, int degree);

  const Ring& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(modules_.size()) - 1; }
  bool empty() const { return modules_.empty(); }

  Module at(int n) const;
  /// d_n: C_n -> C_{n-1}.
  Morphism d(int n) const;

  /// Drops zero modules at either end of the support.
  Complex trimmed() const;
  bool is_zero() const;

  std::string to_string() const;
  bool operator==(const Complex& o) const;

 private:
  Ring ring_ = Ring::integers();
  int lo_ = 0;
  std::vector<Module> modules_;
  std::vector<Morphism> diffs_;
};

/// Degree-0 chain map: parts f_n: X_n -> Y_n commuting with differentials.
class ChainMap {
 public:
  ChainMap() = default;
  /// parts[i] is f_{lo+i}; degrees outside [lo, lo+parts.size()) are zero.
  ChainMap(Complex source, Complex target, int lo, std::vector<Morphism> parts);

  static ChainMap identity(const Complex& c);
  static ChainMap zero(const Complex& s, const Complex& t);

  const Complex& source() const { return src_; }
  const Complex& target() const { return tgt_; }
  Morphism at(int n) const;

  ChainMap operator+(const ChainMap& o) const;
  ChainMap operator-(const ChainMap& o) const;
  ChainMap operator-() const;
  bool operator==(const ChainMap& o) const;
  bool is_zero() const;

 private:
  Complex src_, tgt_;
  int lo_ = 0;
  std::vector<Morphism> parts_;
};

/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Degree-raising maps s_n: X_n -> Y_{n+1} witnessing
/// f_n - g_n = d^Y_{n+1} s_n + s_{n-1} d^X_n.
struct Homotopy {
  ChainMap f, g;
  std::vector<Morphism> parts;  // parts[i] = s_{lo+i}
  int lo = 0;
  Morphism at(int n) const;
  /// Re-substitutes into the homotopy equation in every degree <= top.
  bool verify(std::optional<int> top = std::nullopt) const;
};

/// (C[k])_n = C_{n-k} with differential (-1)^k d.
Complex shift(const Complex& c, int k);

enum class Truncation {
  hard_above,  // C_n for n <= degree, zero above
  hard_below,  // C_n for n >= degree, zero below
  soft_above,  // ... -> C_{degree}(C) -> C_{degree-1} -> ..., keeps H_n for n <= degree
  soft_below,  // ... -> C_{degree+1} -> Z_{degree} -> 0, keeps H_n for n >= degree
};
Complex truncate(const Complex& c, Truncation mode, int degree);

/// The canonical quotient map C -> truncate(C, hard_above, degree).
ChainMap hard_truncation_map(const Complex& c, int degree);
/// The canonical quotient map C -> truncate(C, soft_above, degree).
ChainMap soft_truncation_map(const Complex& c, int degree);

/// H_n = ker d_n / im d_{n+1}, presented inside the ambient coordinates of
/// C_n so that chain maps can act on representatives.
Homology homology_at(const Complex& c, int n);
/// Largest n with H_n != 0; -inf for exact complexes.
ExtInt sup_h(const Complex& c);
/// Smallest n with H_n != 0; +inf for exact complexes.
ExtInt inf_h(const Complex& c);
bool is_exact(const Complex& c);

/// C_j = coker d_{j+1}.
Module boundary_cokernel(const Complex& c, int j);
/// Z_j = ker d_j.
Kernel cycles(const Complex& c, int j);

/// H_n(f) on the presented homology modules.
Morphism induced_map(const ChainMap& f, int n);

}  // namespace gfd
