#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfd/resolution.hpp"

namespace gfd {

struct DimensionReport {
  DimKind kind = DimKind::gfd;
  ExtInt value;
  /// Critical degree: the smallest g whose cokernel (or threshold) qualifies.
  std::optional<int> g;
  std::vector<std::string> certificates;
  /// The same dimension from an independent second resolution.
  ExtInt cross_check;
  bool consistent() const { return value == cross_check; }
};

/// Class search on a DG-projective resolution P -> N: the smallest g >= sup H
/// with C_g(P) in the class of `kind` (pd/fd: free; gfd: Gorenstein flat).
/// Infinite answers carry a certificate: two cokernels above sup H with the
/// same non-free part and no qualifying cokernel in between. -inf for exact N.
DimensionReport cokernel_search(const Complex& n, DimKind kind, DgRoute route = DgRoute::minimal,
                                std::uint64_t seed = 0);

/// fd / gfd / pd by the cokernel search (minimal route, cross-checked on the
/// padded route), gpd by the complete-resolution threshold, gid directly
/// from the DG-injective resolution (dual of a resolution of the dual; finite
/// rings only, UnsupportedRing otherwise).
DimensionReport dimension_of_complex(const Complex& n, DimKind kind, std::uint64_t seed = 1);

/// Projective dimension of C as an object of the abelian category of
/// complexes: infinite unless C is exact, in which case it is the largest
/// projective dimension of the cycle modules.
ExtInt complex_projective_dimension(const Complex& c);

struct Verdict {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct DimensionSuite {
  std::vector<DimensionReport> reports;  // fd, gfd, gpd, and gid of the dual when available
  std::vector<Verdict> verdicts;
  bool all_hold() const;
  const DimensionReport* find(DimKind k) const;
};

/// Every dimension of N together with the relations between them; the
/// Gorenstein bound uses the self-injective dimension of the ring.
DimensionSuite dimension_report_suite(const Complex& n, std::uint64_t seed = 1);

}  // namespace gfd
