#pragma once

#include <random>

#include "gfd/constructions.hpp"

namespace gfd {

/// Size bounds for generated objects. Over the integers all generated
/// components are free (torsion-free fixtures) with entries in
/// [-int_bound, int_bound].
struct FixtureBounds {
  int max_support = 3;
  int max_gens = 2;
  int int_bound = 3;
};

/// Deterministic generator of small random objects; the seed fixes every
/// draw.
class FixtureGenerator {
 public:
  FixtureGenerator(Ring ring, std::uint64_t seed, FixtureBounds bounds = {});

  const Ring& ring() const { return ring_; }
  std::mt19937_64& rng() { return rng_; }

  Elem element();
  Module module(int min_gens = 1);
  Morphism morphism(const Module& a, const Module& b);
  /// Random element of a presented module, in reduced coordinates.
  Vec vector(const Module& m);

  /// Any complex (exact or not) on a support of at most max_support degrees.
  Complex complex();
  Complex exact_complex();
  Complex nonexact_complex();
  /// A random degree-0 chain map X -> Y (a random cycle of Hom(X, Y)_0).
  ChainMap chain_map(const Complex& x, const Complex& y);
  /// 0 -> A -> B -> C -> 0 with B_n = A_n (+) C_n and the middle
  /// differential twisted by a random cycle of Hom(C, A)_{-1}; degreewise
  /// split but in general not split as complexes. With boundary_twist the
  /// cycle is a boundary, so the sequence splits as complexes (though not in
  /// the given coordinates) and is Hom(X, -) exact for every X.
  ShortExactSequence split_ses(bool boundary_twist = false);

 private:
  int between(int lo, int hi);
  Ring ring_;
  std::mt19937_64 rng_;
  FixtureBounds bounds_;
};

/// The complex 0 -> Z --2--> Z -> 0 in degrees 1, 0 (or its analogue over a
/// chain ring with the uniformizer).
Complex two_term_multiplication(const Ring& r);
/// The residue field k = R/(pi) concentrated in degree 0.
Complex residue_field_at_zero(const Ring& r);

}  // namespace gfd
