#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gfd/classes.hpp"
#include "gfd/constructions.hpp"

namespace gfd {

enum class BundleFlavor { projective, dg_projective, injective_co, gp_precover };
std::string to_string(BundleFlavor f);

/// A resolution together with its comparison map. For every flavor except
/// injective_co, `map` goes resolution -> target; for injective_co it goes
/// target -> resolution.
struct ResolutionBundle {
  Complex target;
  Complex resolution;
  ChainMap map;
  BundleFlavor flavor = BundleFlavor::projective;
  /// Resolutions that do not terminate are built on a window; the map is a
  /// quasi-isomorphism in homological degrees <= valid_through (>= for
  /// coresolutions). nullopt means the resolution is complete.
  std::optional<int> valid_through;
  /// gp_precover: projective dimension of ker(map) per degree.
  std::map<int, ExtInt> kernel_profile;

  /// Re-checks the quasi-isomorphism on the valid range, degreewise
  /// surjectivity for dg_projective/gp_precover, and the kernel profile.
  bool verify() const;
};

/// ... -> P_1 -> P_0 -> M with P_i free on minimal generators, up to
/// degree `length` (or until a syzygy vanishes).
ResolutionBundle projective_resolution(const Module& m, int length);

/// 0 -> M -> I^0 -> I^{-1} -> ..., placed in degrees 0, -1, ..., as the dual
/// of a projective resolution of the dual module. Finite rings only.
ResolutionBundle injective_coresolution(const Module& m, int length);

/// How a DG-projective resolution picks generators: `minimal` covers each
/// cycle module by its minimal generators; `padded` uses every raw solver
/// generator plus seeded random contractible disks, giving a second,
/// genuinely different resolution.
enum class DgRoute { minimal, padded };

/// Surjective DG-projective resolution P -> N built degree by degree up to
/// degree `top`: P_n is free on generators of
///   K_n = { (z, y) in P_{n-1} (+) N_n : dz = 0, phi z = dy },
/// with d(z, y) = z and phi(z, y) = y.
ResolutionBundle dg_projective_resolution(const Complex& n, int top, DgRoute route = DgRoute::minimal,
                                          std::uint64_t seed = 0);

/// A complete resolution T -> P materialized on a window.
struct CompleteResolution {
  Complex T;
  ResolutionBundle P;
  ChainMap u;  // T -> P (on the window)
  /// u_i is bijective for i >= threshold; -inf for exact complexes.
  ExtInt threshold;
  int window_lo = 0, window_hi = 0;
  std::optional<int> period;
  std::string certificate;

  /// T exact and termwise projective on the interior of the window,
  /// Hom(T, R) exact there (tested against the indecomposable projective
  /// R), u a chain map that is the identity at and above the threshold.
  bool verify() const;
};

/// Splices P above the threshold g with the dual of a projective resolution
/// of C_g(P)^+ (quasi-Frobenius rings), or with C_g(P) itself when that
/// cokernel is free (integers). Throws NoCompleteResolution when no
/// threshold in [sup H, sup H + search] has a Gorenstein projective
/// cokernel.
CompleteResolution complete_resolution(const Complex& n, int window_lo, int window_hi,
                                       int search = 3);

enum class PrecoverPolicy { inductive, identity };  // CLI names: lemma7, identity
std::string to_string(PrecoverPolicy p);
PrecoverPolicy precover_policy_from_string(const std::string& s);

/// Intermediate objects of the inductive construction.
struct PrecoverTrace {
  std::vector<ResolutionBundle> stages;  // precovers of M(lo), M(lo+1), ...
  std::vector<ChainMap> lifts;           // u: G'[n] -> G(n) for each step
};

/// Special Gorenstein projective precover G -> M of a bounded complex.
/// Over the quasi-Frobenius factors the inductive policy runs the induction on
/// the length of M (module-level resolution of the bottom module, then a
/// lifted cone per degree); identity returns G = M. Over the integers both
/// policies return the DG-projective resolution (Gorenstein projective =
/// projective there).
ResolutionBundle special_gp_precover(const Complex& m, PrecoverPolicy policy = PrecoverPolicy::inductive,
                                     PrecoverTrace* trace = nullptr);

/// Module-level special Gorenstein projective resolution used as the base
/// case: G_0 = M (+) F, G_1 = F with d(f) = (-pi e(f), f) and
/// G_0 -> M, (m, f) |-> m + pi e(f), where e: F -> M is the free cover.
ResolutionBundle special_gp_resolution(const Module& m, int degree);

enum class HorseshoeFlavor { gp, dg };

struct HorseshoeResult {
  ResolutionBundle left, middle, right;  // over M', M, M''
  ShortExactSequence resolutions;        // 0 -> G' -> G' (+) G'' -> G'' -> 0
  ShortExactSequence kernels;            // 0 -> L' -> L -> L'' -> 0
  ChainMap lift;                         // u: G'' -> M with h u = phi''
};

/// Middle precover phi(x, y) = l phi'(x) + u(y) for a degreewise split
/// short exact sequence 0 -> M' --l--> M --h--> M'' -> 0. Throws
/// LiftNotFound when the lift u does not exist (the sequence is not
/// Hom(GorProj, -) exact, resp. Hom(DG-Proj, -) exact). `top` bounds the
/// DG-projective windows for the dg flavor.
HorseshoeResult horseshoe(const ShortExactSequence& ses, HorseshoeFlavor flavor,
                          PrecoverPolicy policy = PrecoverPolicy::inductive, int top = 8);

/// A chain map u: X -> resolution with map u = f. Throws LiftNotFound if X
/// fails the class gate (Gorenstein projective components for precovers,
/// projective components for DG-projective resolutions) or no lift exists.
/// With an rng, a random lift from the affine solution space is returned.
ChainMap lift_through_precover(const ChainMap& f, const ResolutionBundle& bundle,
                               std::mt19937_64* rng = nullptr);

}  // namespace gfd
