#include "gfd/classes.hpp"

#include <map>

namespace gfd {

std::string to_string(ClassName c) {
  switch (c) {
    case ClassName::projective: return "projective";
    case ClassName::flat: return "flat";
    case ClassName::injective: return "injective";
    case ClassName::gorenstein_projective: return "gorenstein_projective";
    case ClassName::gorenstein_flat: return "gorenstein_flat";
    case ClassName::gorenstein_injective: return "gorenstein_injective";
  }
  return "?";
}

ClassName class_from_string(const std::string& s) {
  for (ClassName c : {ClassName::projective, ClassName::flat, ClassName::injective,
                      ClassName::gorenstein_projective, ClassName::gorenstein_flat,
                      ClassName::gorenstein_injective})
    if (to_string(c) == s) return c;
  throw ParseError("unknown module class '" + s + "'");
}

std::string to_string(DimKind k) {
  switch (k) {
    case DimKind::pd: return "pd";
    case DimKind::fd: return "fd";
    case DimKind::gpd: return "gpd";
    case DimKind::gfd: return "gfd";
    case DimKind::gid: return "gid";
  }
  return "?";
}

namespace {

std::string first_torsion(const Module& m) {
  for (Elem a : m.invariants())
    if (a != 0) return m.ring().format(a);
  return "";
}

}  // namespace

Membership class_membership(const Module& m, ClassName c) {
  const Ring& r = m.ring();
  bool free = m.is_free();
  std::string why_not = free ? "" : "invariant factor " + first_torsion(m) + " is not free";
  if (r.is_finite()) {
    switch (c) {
      case ClassName::projective:
      case ClassName::flat:
      case ClassName::injective:
        if (free) return {true, "free of rank " + std::to_string(m.gens()) + " over " + r.name()};
        return {false, why_not};
      case ClassName::gorenstein_projective:
      case ClassName::gorenstein_flat:
      case ClassName::gorenstein_injective:
        return {true, "quasi-Frobenius ring: the periodic complete resolution of each cyclic "
                      "summand R/(p^a) alternates multiplication by p^a and p^(k-a)"};
    }
  }
  switch (c) {
    case ClassName::projective:
    case ClassName::flat:
    case ClassName::gorenstein_projective:
    case ClassName::gorenstein_flat:
      if (free) return {true, "free of rank " + std::to_string(m.gens()) + " over Z"};
      return {false, why_not};
    case ClassName::injective:
    case ClassName::gorenstein_injective:
      if (m.is_zero()) return {true, "zero module"};
      return {false, "nonzero finitely generated abelian groups are not divisible"};
  }
  return {false, "?"};
}

Module syzygy(const Module& m) { return kernel(free_cover(m)).module; }

ModuleDimension module_dimension(const Module& m, DimKind kind) {
  if (m.is_zero()) return {ExtInt::neg_inf(), "zero-module"};
  const Ring& r = m.ring();
  if (kind == DimKind::gid) {
    if (r.is_finite()) return {0, "every module over a quasi-Frobenius ring is Gorenstein injective"};
    return {1, "injective dimension over Z is at most 1 and no nonzero f.g. group is injective"};
  }
  if (r.is_finite() && (kind == DimKind::gpd || kind == DimKind::gfd))
    return {0, "Gorenstein projective/flat over a quasi-Frobenius ring"};
  // pd, fd, and the Gorenstein kinds over Z (which coincide with pd there).
  std::map<Vec, int> seen;
  Module cur = m;
  constexpr int kMaxSteps = 256;
  for (int step = 0; step < kMaxSteps; ++step) {
    if (cur.is_free())
      return {step, step == 0 ? "free" : "syzygy " + std::to_string(step) + " is free"};
    Vec key = cur.invariants();
    auto [it, inserted] = seen.emplace(key, step);
    if (!inserted)
      return {ExtInt::pos_inf(), "syzygy " + std::to_string(step) + " repeats syzygy " +
                                     std::to_string(it->second) + " (" + cur.to_string() +
                                     ") with no free term"};
    cur = syzygy(cur);
  }
  throw Error("DimensionSearch", "syzygy search did not terminate");
}

}  // namespace gfd
