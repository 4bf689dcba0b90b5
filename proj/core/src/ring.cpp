#include "gfd/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gfd/errors.hpp"

namespace gfd {

namespace {

Elem checked_add(Elem a, Elem b) {
  Elem r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticOverflow("integer addition overflows 64 bits");
  return r;
}

Elem checked_mul(Elem a, Elem b) {
  Elem r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticOverflow("integer multiplication overflows 64 bits");
  return r;
}

Elem checked_neg(Elem a) {
  if (a == INT64_MIN) throw ArithmeticOverflow("integer negation overflows");
  return -a;
}

std::int64_t ipow(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, p);
  return r;
}

Elem mod_nonneg(Elem a, Elem m) {
  Elem r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// Arithmetic tables for truncated polynomial rings. Digits are decoded on
// every operation otherwise, which dominates elimination time.
struct Ring::Tables {
  std::vector<Elem> add, mul, neg;
  std::int64_t n = 0;
};

namespace {

Elem poly_add_raw(Elem a, Elem b, std::int64_t p, int len) {
  Elem r = 0, place = 1;
  for (int i = 0; i < len; ++i) {
    r += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return r;
}

Elem poly_neg_raw(Elem a, std::int64_t p, int len) {
  Elem r = 0, place = 1;
  for (int i = 0; i < len; ++i) {
    r += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return r;
}

Elem poly_mul_raw(Elem a, Elem b, std::int64_t p, int len) {
  std::vector<std::int64_t> x(len), y(len), z(len, 0);
  for (int i = 0; i < len; ++i) {
    x[i] = a % p;
    a /= p;
    y[i] = b % p;
    b /= p;
  }
  for (int i = 0; i < len; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j < len; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  }
  Elem r = 0;
  for (int i = len - 1; i >= 0; --i) r = r * p + z[i];
  return r;
}

constexpr std::int64_t kTableLimit = 256;

std::shared_ptr<const Ring::Tables> make_tables(std::int64_t p, int len,
                                                std::int64_t size);

}  // namespace

Ring::Ring(RingKind kind, std::int64_t p, int k) : kind_(kind), p_(p), k_(k) {
  if (kind == RingKind::integers) return;
  if (!is_prime(p)) throw NonPrimeBase("base " + std::to_string(p) + " is not prime");
  if (k < 1) throw BadModulus("chain ring length must be at least 1");
  size_ = ipow(p, k);
}

Ring Ring::integers() { return Ring(RingKind::integers, 0, 0); }

Ring Ring::zmod(std::int64_t p, int k) { return Ring(RingKind::zmod, p, k); }

Ring Ring::trunc_poly(std::int64_t p, int n) {
  Ring r(RingKind::trunc_poly, p, n);
  if (r.size_ <= kTableLimit) r.tables_ = make_tables(p, n, r.size_);
  return r;
}

namespace {

std::shared_ptr<const Ring::Tables> make_tables(std::int64_t p, int len,
                                                std::int64_t size) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const Ring::Tables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, len}];
  if (slot) return slot;
  auto t = std::make_shared<Ring::Tables>();
  t->n = size;
  t->add.resize(size * size);
  t->mul.resize(size * size);
  t->neg.resize(size);
  for (Elem a = 0; a < size; ++a) {
    t->neg[a] = poly_neg_raw(a, p, len);
    for (Elem b = 0; b < size; ++b) {
      t->add[a * size + b] = poly_add_raw(a, b, p, len);
      t->mul[a * size + b] = poly_mul_raw(a, b, p, len);
    }
  }
  slot = t;
  return slot;
}

}  // namespace

Elem Ring::from_integer(std::int64_t v) const {
  switch (kind_) {
    case RingKind::integers: return v;
    case RingKind::zmod: return mod_nonneg(v, size_);
    case RingKind::trunc_poly: return mod_nonneg(v, p_);
  }
  return 0;
}

Elem Ring::add(Elem a, Elem b) const {
  switch (kind_) {
    case RingKind::integers: return checked_add(a, b);
    case RingKind::zmod: {
      Elem r = a + b;
      return r >= size_ ? r - size_ : r;
    }
    case RingKind::trunc_poly:
      if (p_ == 2) return a ^ b;
      if (tables_) return tables_->add[a * size_ + b];
      return poly_add_raw(a, b, p_, k_);
  }
  return 0;
}

Elem Ring::neg(Elem a) const {
  switch (kind_) {
    case RingKind::integers: return checked_neg(a);
    case RingKind::zmod: return a == 0 ? 0 : size_ - a;
    case RingKind::trunc_poly:
      if (p_ == 2) return a;
      if (tables_) return tables_->neg[a];
      return poly_neg_raw(a, p_, k_);
  }
  return 0;
}

Elem Ring::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Ring::poly_mul(Elem a, Elem b) const {
  if (tables_) return tables_->mul[a * size_ + b];
  return poly_mul_raw(a, b, p_, k_);
}

Elem Ring::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (a == 1) return b;
  if (b == 1) return a;
  switch (kind_) {
    case RingKind::integers: return checked_mul(a, b);
    case RingKind::zmod: {
      __extension__ using wide = __int128;
      wide r = static_cast<wide>(a) * b;
      return static_cast<Elem>(r % size_);
    }
    case RingKind::trunc_poly: return poly_mul(a, b);
  }
  return 0;
}

int Ring::valuation(Elem a) const {
  if (kind_ == RingKind::integers)
    throw UnsupportedRing("valuation is defined for chain rings only");
  if (a == 0) return k_;
  int v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

std::int64_t Ring::pivot_key(Elem a) const {
  if (kind_ == RingKind::integers) return a < 0 ? -a : a;
  return valuation(a);
}

bool Ring::is_unit(Elem a) const {
  if (kind_ == RingKind::integers) return a == 1 || a == -1;
  return a % p_ != 0;
}

Elem Ring::inverse(Elem u) const {
  switch (kind_) {
    case RingKind::integers:
      if (u == 1 || u == -1) return u;
      break;
    case RingKind::zmod: {
      if (u % p_ == 0) break;
      // extended Euclid on (u, p^k)
      Elem r0 = size_, r1 = u, t0 = 0, t1 = 1;
      while (r1 != 0) {
        Elem q = r0 / r1;
        Elem r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Elem t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
      }
      return mod_nonneg(t0, size_);
    }
    case RingKind::trunc_poly: {
      if (u % p_ == 0) break;
      // u = c(1 - w) with w nilpotent; invert the constant, then Newton.
      Elem c = u % p_;
      Ring fp = Ring::zmod(p_, 1);
      Elem cinv = fp.inverse(c);
      Elem x = cinv;
      for (int iter = 0; (1 << iter) < k_ + 1; ++iter) {
        // x <- x(2 - u x)
        Elem ux = mul(u, x);
        x = mul(x, sub(from_integer(2), ux));
      }
      return x;
    }
  }
  throw ArithmeticOverflow("element " + format(u) + " is not a unit");
}

namespace {

// pi^e as an element code; pi^k and beyond are zero.
Elem pi_pow(std::int64_t p, int k, int e) {
  if (e >= k) return 0;
  return ipow(p, e);
}

}  // namespace

std::pair<Elem, Elem> Ring::associate(Elem a) const {
  if (a == 0) return {0, 1};
  if (kind_ == RingKind::integers) return a < 0 ? std::pair<Elem, Elem>{checked_neg(a), -1} : std::pair<Elem, Elem>{a, 1};
  int v = valuation(a);
  Elem pv = ipow(p_, v);
  // For both chain kinds dividing the code by p^v shifts off v zero digits.
  Elem unit = a / pv;
  return {pv, unit};
}

bool Ring::divides(Elem d, Elem a) const {
  if (a == 0) return true;
  if (d == 0) return false;
  if (kind_ == RingKind::integers) return a % d == 0;
  return valuation(d) <= valuation(a);
}

Elem Ring::exact_div(Elem a, Elem d) const {
  if (a == 0) return 0;
  if (!divides(d, a))
    throw ArithmeticOverflow(format(d) + " does not divide " + format(a));
  if (kind_ == RingKind::integers) return a / d;
  auto [ca, ua] = associate(a);
  auto [cd, ud] = associate(d);
  int e = valuation(ca) - valuation(cd);
  return mul(pi_pow(p_, k_, e), mul(ua, inverse(ud)));
}

std::pair<Elem, Elem> Ring::divmod(Elem a, Elem d) const {
  if (d == 0) return {0, a};
  if (kind_ == RingKind::integers) return {a / d, a % d};
  if (divides(d, a)) return {exact_div(a, d), 0};
  return {0, a};
}

Elem Ring::gcd(Elem a, Elem b) const {
  if (kind_ == RingKind::integers) {
    Elem x = a < 0 ? checked_neg(a) : a;
    Elem y = b < 0 ? checked_neg(b) : b;
    return std::gcd(x, y);
  }
  return pi_pow(p_, k_, std::min(valuation(a), valuation(b)));
}

Elem Ring::reduce_mod(Elem a, Elem d) const {
  if (kind_ == RingKind::integers) {
    if (d == 0) return a;
    Elem m = d < 0 ? checked_neg(d) : d;
    return mod_nonneg(a, m);
  }
  int e = valuation(d);
  if (e >= k_) return kind_ == RingKind::zmod ? mod_nonneg(a, size_) : a;
  // code mod p^e keeps the residue (zmod) or the low e coefficients (poly)
  return a % ipow(p_, e);
}

Elem Ring::annihilator(Elem d) const {
  if (kind_ == RingKind::integers) return d == 0 ? 1 : 0;
  return pi_pow(p_, k_, k_ - valuation(d));
}

std::pair<Elem, Elem> Ring::hom_cyclic(Elem a, Elem b) const {
  if (kind_ == RingKind::integers) {
    if (a == 0) return {1, canonical(b)};
    if (b == 0) return {0, 1};
    Elem g = gcd(a, b);
    return {reduce_mod(exact_div(canonical(b), g), b), g};
  }
  int alpha = valuation(a), beta = valuation(b);
  Elem gen = pi_pow(p_, k_, std::max(beta - alpha, 0));
  Elem order = pi_pow(p_, k_, std::min(alpha, beta));
  if (std::min(alpha, beta) == 0) gen = 0;
  return {gen, order};
}

Ring::Bezout Ring::bezout(Elem a, Elem b) const {
  // extended Euclid; result g >= 0
  Elem r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Elem q = r0 / r1;
    Elem r2 = checked_add(r0, checked_neg(checked_mul(q, r1)));
    r0 = r1;
    r1 = r2;
    Elem s2 = checked_add(s0, checked_neg(checked_mul(q, s1)));
    s0 = s1;
    s1 = s2;
    Elem t2 = checked_add(t0, checked_neg(checked_mul(q, t1)));
    t0 = t1;
    t1 = t2;
  }
  if (r0 < 0) return {checked_neg(r0), checked_neg(s0), checked_neg(t0)};
  return {r0, s0, t0};
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::integers: return "Z";
    case RingKind::zmod: return "Z/" + std::to_string(size_);
    case RingKind::trunc_poly:
      return "F" + std::to_string(p_) + "[x]/(x^" + std::to_string(k_) + ")";
  }
  return "?";
}

std::vector<std::int64_t> Ring::coefficients(Elem a) const {
  if (kind_ != RingKind::trunc_poly) return {a};
  std::vector<std::int64_t> c(k_);
  for (int i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Ring::from_coefficients(const std::vector<std::int64_t>& c) const {
  if (kind_ != RingKind::trunc_poly) {
    if (c.size() != 1) throw ParseError("expected a single residue for " + name());
    return from_integer(c[0]);
  }
  Elem r = 0;
  int len = std::min<int>(k_, static_cast<int>(c.size()));
  for (int i = len - 1; i >= 0; --i) r = r * p_ + mod_nonneg(c[i], p_);
  return r;
}

std::string Ring::format(Elem a) const {
  if (kind_ != RingKind::trunc_poly) return std::to_string(a);
  if (a == 0) return "0";
  std::ostringstream out;
  auto c = coefficients(a);
  bool first = true;
  for (int i = 0; i < k_; ++i) {
    if (c[i] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0) {
      out << c[i];
      continue;
    }
    if (c[i] != 1) out << c[i];
    out << "x";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string RingSpec::name() const {
  switch (kind) {
    case Kind::integers: return "Z";
    case Kind::zmod: return "Zmod(" + std::to_string(n) + ")";
    case Kind::trunc_poly:
      return "TruncPoly(" + std::to_string(p) + "," + std::to_string(n) + ")";
    case Kind::product: {
      std::string s = "Product(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += factors[i].name();
      }
      return s + ")";
    }
  }
  return "?";
}

GorensteinProfile factor_profile(const Ring& ring) {
  GorensteinProfile g;
  if (ring.kind() == RingKind::integers) {
    g.self_injective_dim = 1;
    g.is_quasi_frobenius = false;
    g.is_finite = false;
    g.finitistic_pd = 1;
  } else {
    g.self_injective_dim = 0;
    g.is_quasi_frobenius = true;
    g.is_finite = true;
    g.finitistic_pd = 0;
  }
  return g;
}

namespace {

void flatten(const RingSpec& s, std::vector<RingSpec>& out) {
  if (s.kind == RingSpec::Kind::product) {
    for (const auto& f : s.factors) flatten(f, out);
  } else {
    out.push_back(s);
  }
}

void append_factors(const RingSpec& s, std::vector<Ring>& out) {
  switch (s.kind) {
    case RingSpec::Kind::integers: out.push_back(Ring::integers()); break;
    case RingSpec::Kind::zmod:
      if (s.n < 2) throw BadModulus("Zmod modulus must be at least 2, got " + std::to_string(s.n));
      for (auto [p, k] : factorize(s.n)) out.push_back(Ring::zmod(p, k));
      break;
    case RingSpec::Kind::trunc_poly:
      if (!is_prime(s.p))
        throw NonPrimeBase("TruncPoly characteristic " + std::to_string(s.p) + " is not prime");
      if (s.n < 1) throw BadModulus("TruncPoly length must be at least 1");
      out.push_back(Ring::trunc_poly(s.p, static_cast<int>(s.n)));
      break;
    case RingSpec::Kind::product: break;
  }
}

}  // namespace

RingHandle make_ring(const RingSpec& spec) {
  RingHandle h;
  if (spec.kind == RingSpec::Kind::product) {
    std::vector<RingSpec> flat;
    flatten(spec, flat);
    if (flat.empty()) throw BadModulus("a product ring needs at least one factor");
    h.spec_ = RingSpec::product(std::move(flat));
    for (const auto& f : h.spec_.factors) append_factors(f, h.factors_);
  } else {
    h.spec_ = spec;
    append_factors(spec, h.factors_);
  }
  GorensteinProfile g;
  g.self_injective_dim = 0;
  g.is_quasi_frobenius = true;
  g.is_finite = true;
  g.finitistic_pd = 0;
  for (const auto& r : h.factors_) {
    auto f = factor_profile(r);
    g.self_injective_dim = std::max(g.self_injective_dim, f.self_injective_dim);
    g.is_quasi_frobenius = g.is_quasi_frobenius && f.is_quasi_frobenius;
    g.is_finite = g.is_finite && f.is_finite;
    g.finitistic_pd = std::max(g.finitistic_pd, f.finitistic_pd);
  }
  h.profile_ = g;
  return h;
}

GorensteinProfile ring_profile(const RingHandle& ring) { return ring.profile(); }

}  // namespace gfd
