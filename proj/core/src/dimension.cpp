#include "gfd/dimension.hpp"

#include <map>

namespace gfd {

namespace {

ClassName class_for(DimKind k) {
  switch (k) {
    case DimKind::pd: return ClassName::projective;
    case DimKind::fd: return ClassName::flat;
    case DimKind::gfd: return ClassName::gorenstein_flat;
    case DimKind::gpd: return ClassName::gorenstein_projective;
    case DimKind::gid: return ClassName::gorenstein_injective;
  }
  return ClassName::projective;
}

constexpr int kStep = 6;
constexpr int kReach = 60;

// Walks a sequence of modules where each is a syzygy of the previous one up
// to free summands; stops at the first member of `cls` or at the first
// repeated non-free part.
template <class ModuleAt>
std::optional<DimensionReport> walk(DimKind kind, int from, int to, int step, ModuleAt module_at,
                                    const std::string& label) {
  ClassName cls = class_for(kind);
  std::map<Vec, int> seen;
  for (int g = from; step > 0 ? g <= to : g >= to; g += step) {
    Module c = module_at(g);
    int deg = step > 0 ? g : -g;
    if (class_membership(c, cls)) {
      DimensionReport r;
      r.kind = kind;
      r.value = deg;
      r.g = deg;
      r.certificates.push_back(label + std::to_string(g) + " = " + c.to_string() + " is " + to_string(cls));
      return r;
    }
    Vec key = c.torsion_invariants();
    auto it = seen.find(key);
    if (it != seen.end()) {
      DimensionReport r;
      r.kind = kind;
      r.value = ExtInt::pos_inf();
      r.certificates.push_back(label + std::to_string(it->second) + " and " + label + std::to_string(g) +
                               " agree up to free summands and none in between is " + to_string(cls));
      return r;
    }
    seen.emplace(key, g);
  }
  return std::nullopt;
}

DimensionReport exact_report(DimKind kind) {
  DimensionReport r;
  r.kind = kind;
  r.value = ExtInt::neg_inf();
  r.cross_check = ExtInt::neg_inf();
  r.certificates.push_back("exact complex");
  return r;
}

DimensionReport gid_direct(const Complex& n) {
  const Ring& r = n.ring();
  if (!r.is_finite()) throw UnsupportedRing("Gid is computed over the finite catalog rings only");
  ExtInt lowest = inf_h(n);
  if (lowest.is_pos_inf()) return exact_report(DimKind::gid);
  int i = lowest.value();
  Complex nd = dual_complex(n);
  for (int top = -i + kStep; top <= -i + kReach; top += kStep) {
    ResolutionBundle p = dg_projective_resolution(nd, top);
    Complex inj = dual_complex(p.resolution);
    int reach = p.valid_through ? *p.valid_through : top;
    auto found = walk(DimKind::gid, i, -reach + 1, -1,
                      [&](int d) { return cycles(inj, d).module; }, "Z_");
    if (found) {
      found->certificates.push_back("DG-injective resolution I = P(N^+)^+ on degrees >= " +
                                    std::to_string(-reach));
      return *found;
    }
  }
  throw ValidationError("Gid search undecided within the reach of the resolution window");
}

}  // namespace

DimensionReport cokernel_search(const Complex& n, DimKind kind, DgRoute route, std::uint64_t seed) {
  if (kind == DimKind::gid) throw ValidationError("cokernel search does not compute Gid");
  ExtInt s = sup_h(n);
  if (s.is_neg_inf()) return exact_report(kind);
  Complex nt = n.trimmed();
  int base = std::max(s.value(), nt.hi() + 1);
  for (int top = base + kStep; top <= base + kReach; top += kStep) {
    ResolutionBundle p = dg_projective_resolution(n, top, route, seed);
    auto found = walk(kind, s.value(), top - 1, 1,
                      [&](int g) { return boundary_cokernel(p.resolution, g); }, "C_");
    if (found) {
      found->certificates.push_back(std::string(route == DgRoute::minimal ? "minimal" : "padded") +
                                    " DG-projective resolution through degree " + std::to_string(top));
      found->cross_check = found->value;
      return *found;
    }
  }
  throw ValidationError("dimension search undecided within the reach of the resolution window");
}

DimensionReport dimension_of_complex(const Complex& n, DimKind kind, std::uint64_t seed) {
  switch (kind) {
    case DimKind::pd:
    case DimKind::fd:
    case DimKind::gfd: {
      DimensionReport r = cokernel_search(n, kind);
      r.cross_check = cokernel_search(n, kind, DgRoute::padded, seed).value;
      return r;
    }
    case DimKind::gpd: {
      ExtInt s = sup_h(n);
      if (s.is_neg_inf()) return exact_report(kind);
      DimensionReport r;
      r.kind = kind;
      try {
        CompleteResolution c = complete_resolution(n, s.value() - 3, s.value() + 3);
        r.value = c.threshold;
        r.g = c.threshold.value();
        r.certificates.push_back(c.certificate);
        r.certificates.push_back(std::string("complete resolution verified on [") +
                                 std::to_string(c.window_lo) + ", " + std::to_string(c.window_hi) +
                                 "]: " + (c.verify() ? "yes" : "no"));
      } catch (const NoCompleteResolution& e) {
        r.value = ExtInt::pos_inf();
        r.certificates.push_back(e.what());
      }
      r.cross_check = cokernel_search(n, kind, DgRoute::padded, seed).value;
      return r;
    }
    case DimKind::gid: {
      DimensionReport r = gid_direct(n);
      if (r.value.is_neg_inf()) return r;
      // Gid C = Gfd C^+ because C = (C^+)^+ over the finite rings
      r.cross_check = cokernel_search(dual_complex(n), DimKind::gfd, DgRoute::padded, seed).value;
      return r;
    }
  }
  throw ValidationError("unknown dimension kind");
}

ExtInt complex_projective_dimension(const Complex& c) {
  if (!is_exact(c)) return ExtInt::pos_inf();
  Complex t = c.trimmed();
  ExtInt best = ExtInt::neg_inf();
  if (t.empty()) return best;
  for (int n = t.lo(); n <= t.hi(); ++n) {
    ExtInt pd = module_dimension(cycles(t, n).module, DimKind::pd).value;
    if (pd > best) best = pd;
  }
  // an exact complex with projective cycles is a projective object
  return best.is_neg_inf() ? ExtInt::neg_inf() : best;
}

bool DimensionSuite::all_hold() const {
  for (const auto& v : verdicts)
    if (!v.holds) return false;
  return true;
}

const DimensionReport* DimensionSuite::find(DimKind k) const {
  for (const auto& r : reports)
    if (r.kind == k) return &r;
  return nullptr;
}

DimensionSuite dimension_report_suite(const Complex& n, std::uint64_t seed) {
  const Ring& r = n.ring();
  DimensionSuite out;
  out.reports.push_back(dimension_of_complex(n, DimKind::fd, seed));
  out.reports.push_back(dimension_of_complex(n, DimKind::gfd, seed));
  out.reports.push_back(dimension_of_complex(n, DimKind::gpd, seed));
  if (r.is_finite()) out.reports.push_back(dimension_of_complex(dual_complex(n), DimKind::gid, seed));
  const DimensionReport& fd = *out.find(DimKind::fd);
  const DimensionReport& gfd = *out.find(DimKind::gfd);
  const DimensionReport& gpd = *out.find(DimKind::gpd);
  auto say = [](const ExtInt& a) { return a.to_string(); };
  for (const auto& rep : out.reports)
    out.verdicts.push_back({to_string(rep.kind) + " independent of the resolution", rep.consistent(),
                            say(rep.value) + " vs " + say(rep.cross_check)});
  out.verdicts.push_back({"Gfd <= fd", gfd.value <= fd.value, say(gfd.value) + " <= " + say(fd.value)});
  if (fd.value.is_finite())
    out.verdicts.push_back({"Gfd = fd when fd is finite", gfd.value == fd.value,
                            say(gfd.value) + " = " + say(fd.value)});
  out.verdicts.push_back({"Gfd <= Gpd", gfd.value <= gpd.value, say(gfd.value) + " <= " + say(gpd.value)});
  if (const DimensionReport* gid = out.find(DimKind::gid))
    out.verdicts.push_back({"Gfd = Gid of the dual", gfd.value == gid->value,
                            say(gfd.value) + " = " + say(gid->value)});
  int sid = factor_profile(r).self_injective_dim;
  ExtInt bound = sup_h(n) + sid;
  out.verdicts.push_back({"Gfd <= self-injective dimension + sup H", gfd.value <= bound,
                          say(gfd.value) + " <= " + std::to_string(sid) + " + " + say(sup_h(n))});
  bool exact = is_exact(n);
  out.verdicts.push_back({"Gfd = -inf exactly for exact complexes", exact == gfd.value.is_neg_inf(),
                          exact ? "exact" : "not exact"});
  out.verdicts.push_back({"finite Gfd forces finite Gpd",
                          gfd.value.is_pos_inf() || !gpd.value.is_pos_inf(),
                          say(gfd.value) + ", " + say(gpd.value)});
  Complex t = n.trimmed();
  if (!t.empty() && t.lo() == t.hi()) {
    ExtInt m = module_dimension(t.at(t.lo()), DimKind::gfd).value + t.lo();
    out.verdicts.push_back({"Gfd of a module placed in one degree", m == gfd.value,
                            say(gfd.value) + " = " + say(m)});
  }
  return out;
}

}  // namespace gfd
