#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gfd {

/// Ring elements are stored as canonical integer codes:
///  - integers: the integer itself (overflow-checked);
///  - Z/p^k: the residue in [0, p^k);
///  - F_p[x]/(x^n): coefficients packed base p, c_0 + c_1 p + ... .
/// In every case zero is 0, one is 1, and the uniformizer power pi^v is p^v.
using Elem = std::int64_t;
using Vec = std::vector<Elem>;

enum class RingKind { integers, zmod, trunc_poly };

/// A local factor of a catalog ring: either the integers (a PID) or a
/// finite chain ring Z/p^k or F_p[x]/(x^n). Cheap to copy.
class Ring {
 public:
  static Ring integers();
  static Ring zmod(std::int64_t p, int k);  // Z/p^k, p prime
  static Ring trunc_poly(std::int64_t p, int n);

  RingKind kind() const { return kind_; }
  std::int64_t prime() const { return p_; }
  /// k for Z/p^k and n for F_p[x]/(x^n); 0 for the integers.
  int length() const { return k_; }
  bool is_finite() const { return kind_ != RingKind::integers; }
  /// Number of elements (finite rings only).
  std::int64_t size() const { return size_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_integer(std::int64_t v) const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// a + b*c
  Elem mul_add(Elem a, Elem b, Elem c) const { return add(a, mul(b, c)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_unit(Elem a) const;
  Elem inverse(Elem unit) const;

  /// Chain rings: exponent of the uniformizer (length() for zero).
  int valuation(Elem a) const;
  /// Pivot priority: a nonzero element with smaller key divides-or-reduces
  /// one with larger key. |a| for the integers, the valuation otherwise.
  std::int64_t pivot_key(Elem a) const;

  /// Splits a = unit * canonical(a); canonical values are p^v (chain
  /// rings) or |a| (integers). Zero maps to zero with unit 1.
  std::pair<Elem, Elem> associate(Elem a) const;  // {canonical, unit}
  Elem canonical(Elem a) const { return associate(a).first; }
  bool divides(Elem d, Elem a) const;
  /// q with q*d == a. Requires divides(d, a).
  Elem exact_div(Elem a, Elem d) const;
  /// Euclidean step: a = q*d + r with r == 0 or pivot_key(r) < pivot_key(d).
  std::pair<Elem, Elem> divmod(Elem a, Elem d) const;
  Elem gcd(Elem a, Elem b) const;
  /// Canonical representative of a in R/(d).
  Elem reduce_mod(Elem a, Elem d) const;
  /// Canonical generator of ann(d).
  Elem annihilator(Elem d) const;
  /// Hom(R/(a), R/(b)) is cyclic: returns {generator in R/(b), order}.
  std::pair<Elem, Elem> hom_cyclic(Elem a, Elem b) const;

  /// Bezout data for the integers: g = s*a + t*b.
  struct Bezout {
    Elem g, s, t;
  };
  Bezout bezout(Elem a, Elem b) const;

  std::string name() const;
  std::string format(Elem a) const;
  /// Coefficient list (truncated polynomials) or a single residue.
  std::vector<std::int64_t> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<std::int64_t>& c) const;

  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  /// Precomputed operation tables for small truncated polynomial rings.
  struct Tables;

 private:
  Ring(RingKind kind, std::int64_t p, int k);
  Elem poly_mul(Elem a, Elem b) const;

  RingKind kind_ = RingKind::integers;
  std::int64_t p_ = 0;
  int k_ = 0;
  std::int64_t size_ = 0;
  std::shared_ptr<const Tables> tables_;
};

/// Description of a catalog ring, as written in workbench documents.
struct RingSpec {
  enum class Kind { integers, zmod, trunc_poly, product };
  Kind kind = Kind::integers;
  std::int64_t n = 0;  // modulus (zmod) or truncation length (trunc_poly)
  std::int64_t p = 0;  // characteristic (trunc_poly)
  std::vector<RingSpec> factors;

  static RingSpec integers() { return {}; }
  static RingSpec zmod(std::int64_t n) { return {Kind::zmod, n, 0, {}}; }
  static RingSpec trunc_poly(std::int64_t p, std::int64_t n) {
    return {Kind::trunc_poly, n, p, {}};
  }
  static RingSpec product(std::vector<RingSpec> f) {
    return {Kind::product, 0, 0, std::move(f)};
  }
  std::string name() const;
  bool operator==(const RingSpec&) const = default;
};

struct GorensteinProfile {
  int self_injective_dim = 0;
  bool is_quasi_frobenius = false;
  bool is_coherent = true;
  bool is_gf_closed = true;
  bool is_finite = false;
  /// Finitistic projective dimension, recorded for reference.
  int finitistic_pd = 0;
  bool operator==(const GorensteinProfile&) const = default;
};

/// A catalog ring together with its decomposition into local factors.
/// Zmod(n) splits along the prime factorization of n; products flatten.
class RingHandle {
 public:
  const RingSpec& spec() const { return spec_; }
  const std::vector<Ring>& factors() const { return factors_; }
  const GorensteinProfile& profile() const { return profile_; }
  std::string name() const { return spec_.name(); }

  bool operator==(const RingHandle& o) const { return spec_ == o.spec_; }

 private:
  friend RingHandle make_ring(const RingSpec& spec);
  RingSpec spec_;
  std::vector<Ring> factors_;
  GorensteinProfile profile_;
};

RingHandle make_ring(const RingSpec& spec);
GorensteinProfile ring_profile(const RingHandle& ring);
GorensteinProfile factor_profile(const Ring& ring);

/// Prime factorization as (p, k) pairs in increasing p.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
bool is_prime(std::int64_t n);

}  // namespace gfd
