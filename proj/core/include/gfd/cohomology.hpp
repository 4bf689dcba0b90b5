#pragma once

#include <map>
#include <string>
#include <vector>

#include "gfd/resolution.hpp"

namespace gfd {

enum class Theory { abs, gor, bar, tate };
std::string to_string(Theory t);
Theory theory_from_string(const std::string& s);

/// Groups H^n = H_{-n} of a Hom complex for n in [lo, hi].
struct CohomologyTable {
  Theory theory = Theory::abs;
  int lo = 0, hi = -1;
  std::map<int, Module> groups;
  std::vector<std::string> provenance;
  const Module& at(int n) const;
  /// Same range and isomorphic groups in every degree.
  bool isomorphic_to(const CohomologyTable& o) const;
};

struct CohomologyOptions {
  PrecoverPolicy policy = PrecoverPolicy::inductive;
  DgRoute route = DgRoute::minimal;
  std::uint64_t seed = 0;
  /// Draw a random lift u instead of the solver's particular one.
  bool random_lift = false;
  /// How far above sup H the Tate theory looks for its threshold.
  int tail_search = 3;
};

/// Everything the generalized Tate theory is built from: a DG-projective
/// resolution P -> M, a special Gorenstein projective precover G -> M, a
/// lift u: P -> G of P -> M, and the cone M(u).
struct ConeData {
  ResolutionBundle P, G;
  ChainMap u;
  Cone cone;
};
ConeData cone_data(const Complex& m, int top, const CohomologyOptions& opt = {});

/// Resolution depth that keeps Hom(P, N) exact through cohomological degree
/// hi + 1 for a target supported in degrees <= N.hi().
int resolution_top(const Complex& m, const Complex& n, int hi);

CohomologyTable table_of(const Complex& hom, Theory t, int lo, int hi);

/// abs: Hom(P, N); gor: Hom(G, N); bar: Hom(M(u), N); tate: Hom(T, N).
CohomologyTable ext_groups(const Complex& m, const Complex& n, int lo, int hi, Theory t,
                           const CohomologyOptions& opt = {});

struct LongExactSequenceReport {
  std::vector<CohomologyTable> tables;
  /// Objects and maps in sequence order; only positions whose index lies in
  /// [lo, hi] are checked.
  SequenceReport sequence;
  int lo = 0, hi = -1;
  int checked() const { return sequence.checked(); }
  int failures() const { return sequence.failures(); }
  bool exact() const { return failures() == 0; }
};

/// ... -> Ext_G^n -> Ext_R^n -> bar^n -> Ext_G^{n+1} -> ... from the
/// degreewise split sequence 0 -> Hom(P, N) -> Hom(M(u), N) -> Hom(G[-1], N) -> 0.
LongExactSequenceReport am_sequence(const Complex& m, const Complex& n, int lo, int hi,
                                    const CohomologyOptions& opt = {});

/// ... -> E^n(M'') -> E^n(M) -> E^n(M') -> E^{n+1}(M'') -> ... for E = gor
/// (Hom of the Gorenstein horseshoe) or bar (Hom of the cone sequence
/// 0 -> M(u') -> M(u) -> M(u'') -> 0). Throws LiftNotFound when the sequence
/// is not Hom(GorProj, -) exact.
LongExactSequenceReport les_first_variable(const ShortExactSequence& ses, const Complex& n, int lo,
                                           int hi, Theory t, const CohomologyOptions& opt = {});

struct DegreeComparison {
  int degree = 0;
  Module bar, tate;
  bool isomorphic = false;
};
/// bar^j vs Tate^j for j in [lo, hi]; requires lo above the top degree of M.
std::vector<DegreeComparison> compare_bar_tate(const Complex& m, const Complex& n, int lo, int hi,
                                               const CohomologyOptions& opt = {});

/// Independence of bar from the choices made: two lifts (explicit inverse
/// cone maps from a homotopy) and two DG-projective resolutions (cone maps
/// whose composites are certified homotopic to identities).
struct ConeIndependence {
  bool omega_psi_inverse = false;
  bool lift_tables_agree = false;
  bool ab_homotopic = false, ba_homotopic = false;
  bool resolution_tables_agree = false;
  bool all() const {
    return omega_psi_inverse && lift_tables_agree && ab_homotopic && ba_homotopic &&
           resolution_tables_agree;
  }
};
ConeIndependence cone_independence(const Complex& m, const Complex& n, int lo, int hi,
                                   std::uint64_t seed);

/// Module-level counterparts, computed from Hom spaces of modules only.
Module module_ext(const Module& m, const Module& n, int degree);
/// From the two-term special Gorenstein projective resolution of m.
Module module_gorenstein_ext(const Module& m, const Module& n, int degree);
/// From the closed-form periodic complete resolution of each cyclic summand
/// (R --pi^a--> R --pi^(k-a)--> R ...); zero over the integers.
Module module_tate_ext(const Module& m, const Module& n, int degree);

}  // namespace gfd
