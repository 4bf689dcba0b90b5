#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfd/normal_form.hpp"

namespace gfd {

/// A finitely generated module over one local factor, kept in reduced
/// diagonal form: the direct sum of R/(orders[i]). Orders are canonical
/// non-units; 0 marks a free summand. Every presentation is reduced to
/// this form on construction, so elements are plain coordinate vectors.
class Module {
 public:
  Module() = default;
  Module(Ring ring, Vec orders);

  static Module free(const Ring& r, int rank) { return Module(r, Vec(rank, 0)); }
  static Module cyclic(const Ring& r, Elem order) { return Module(r, Vec{order}); }
  static Module zero(const Ring& r) { return Module(r, {}); }

  const Ring& ring() const { return ring_; }
  const Vec& orders() const { return orders_; }
  int gens() const { return static_cast<int>(orders_.size()); }
  bool is_zero() const { return orders_.empty(); }
  bool is_free() const;
  int free_rank() const;

  /// Sorted invariant factors (divisibility order, free summands last);
  /// two modules are isomorphic iff these agree.
  Vec invariants() const;
  /// Invariants with the free summands removed.
  Vec torsion_invariants() const;

  /// Number of elements; only for finite rings.
  std::int64_t cardinality() const;

  Vec reduce(const Vec& x) const;
  bool is_zero_element(const Vec& x) const { return vec_is_zero(reduce(x)); }
  Matrix relations() const { return Matrix::diagonal(ring_, orders_); }

  bool operator==(const Module& o) const { return ring_ == o.ring_ && orders_ == o.orders_; }
  bool operator!=(const Module& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Ring ring_ = Ring::integers();
  Vec orders_;
};

Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& parts);
bool is_isomorphic(const Module& a, const Module& b);

/// A module map given on generators: column j is the image of source
/// generator j. Validated against the relations of both modules.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Module source, Module target, Matrix m);

  static Morphism identity(const Module& m);
  static Morphism zero(const Module& s, const Module& t);

  const Module& source() const { return src_; }
  const Module& target() const { return tgt_; }
  const Matrix& matrix() const { return m_; }
  const Ring& ring() const { return src_.ring(); }

  Vec apply(const Vec& x) const { return tgt_.reduce(m_ * x); }
  bool is_zero() const { return m_.is_zero(); }

  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism operator-() const;
  Morphism scaled(Elem c) const;
  bool operator==(const Morphism& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && m_ == o.m_;
  }
  bool operator!=(const Morphism& o) const { return !(*this == o); }

 private:
  Module src_, tgt_;
  Matrix m_;
};

/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
/// f (+) g : A (+) B -> C (+) D
Morphism direct_sum(const Morphism& f, const Morphism& g);
/// Assembles a map between direct sums from its blocks (blocks[i][j]:
/// sources[j] -> targets[i]).
Morphism block_morphism(const std::vector<Module>& targets, const std::vector<Module>& sources,
                        const std::vector<std::vector<Morphism>>& blocks);
Morphism block_of(const Morphism& f, const std::vector<Module>& targets,
                  const std::vector<Module>& sources, int i, int j);

/// The module of a presentation matrix A (cokernel of A: R^cols -> R^rows)
/// together with coordinate changes to and from the reduced form.
struct Presented {
  Module module;
  Matrix to_reduced;    // module.gens() x rows
  Matrix from_reduced;  // rows x module.gens()
};
Presented present_module(const Matrix& A);

/// (span S + span T) / span T inside a free ambient R^r. The presented
/// module carries generator vectors and a coordinate map for any ambient
/// vector lying in span S + span T.
class Subquotient {
 public:
  Subquotient(const Matrix& S, const Matrix& T);

  const Module& module() const { return module_; }
  /// Ambient vectors of the module generators (r x q).
  const Matrix& generators() const { return gens_; }
  bool contains(const Vec& x) const { return st_.solve(x).has_value(); }
  /// Coordinates of x (must lie in span S + span T).
  Vec coords(const Vec& x) const;
  /// Coordinates of x given as a combination S w (+ T z).
  Vec coords_from_s(const Vec& w) const;

 private:
  Module module_;
  Matrix gens_;
  Matrix ukept_;
  int s_cols_ = 0;
  LinearSolver st_;
};

/// A submodule or quotient of a module together with its structure map.
struct Kernel {
  Module module;
  Morphism inclusion;  // module -> source
  Subquotient sq;
};
struct Image {
  Module module;
  Morphism inclusion;  // module -> target
  Subquotient sq;
};
struct Cokernel {
  Module module;
  Morphism projection;  // target -> module
  Subquotient sq;
};

Kernel kernel(const Morphism& f);
Image image(const Morphism& f);
Cokernel cokernel(const Morphism& f);

/// Homology of A --f--> B --g--> C at B (requires g f = 0).
struct Homology {
  Module module;
  Subquotient sq;  // inside the ambient of B
  Matrix cycle_generators() const { return sq.generators(); }
};
Homology homology(const Morphism& f, const Morphism& g);

/// Some x with f(x) = y, if one exists.
std::optional<Vec> preimage(const Morphism& f, const Vec& y);
bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);
bool is_isomorphism(const Morphism& f);
/// im f == ker g, assuming both maps are composable.
bool is_exact_at(const Morphism& f, const Morphism& g);

/// Hom(M, N) in closed form: each pair of cyclic summands contributes a
/// cyclic module generated by a canonical map.
class HomSpace {
 public:
  HomSpace(Module source, Module target);

  const Module& module() const { return module_; }
  const Module& source() const { return src_; }
  const Module& target() const { return tgt_; }

  Morphism to_morphism(const Vec& element) const;
  Vec to_element(const Morphism& f) const;
  Vec to_element(const Matrix& m) const;

  struct Slot {
    int row, col;  // target generator, source generator
    Elem generator;
  };
  const std::vector<Slot>& slots() const { return slots_; }

 private:
  Module src_, tgt_, module_;
  std::vector<Slot> slots_;
};

/// Hom(f, N): Hom(B, N) -> Hom(A, N) for f: A -> B.
Morphism precompose_map(const HomSpace& from, const HomSpace& to, const Morphism& f);
/// Hom(M, g): Hom(M, A) -> Hom(M, B) for g: A -> B.
Morphism postcompose_map(const HomSpace& from, const HomSpace& to, const Morphism& g);

/// M (x) N: R/(a) (x) R/(b) = R/gcd(a, b) per pair of summands.
class TensorSpace {
 public:
  TensorSpace(Module left, Module right);
  const Module& module() const { return module_; }
  const Module& left() const { return left_; }
  const Module& right() const { return right_; }
  /// Generator index of e_i (x) e_j, or -1 when that summand vanishes.
  int index(int i, int j) const { return index_[static_cast<std::size_t>(i) * right_.gens() + j]; }

 private:
  Module left_, right_, module_;
  std::vector<int> index_;
};

/// f (x) g between tensor spaces.
Morphism tensor_map(const TensorSpace& from, const TensorSpace& to, const Morphism& f,
                    const Morphism& g);

/// Hom(M, R). Over the finite catalog factors (self-injective chain rings)
/// this is the character dual; it is also well defined over the integers.
HomSpace ring_dual_space(const Module& m);
Module ring_dual(const Module& m);
/// Hom(f, R): dual(B) -> dual(A).
Morphism ring_dual(const Morphism& f);

/// The character dual (-)^+, available for finite rings only.
Module character_dual(const Module& m);
Morphism character_dual(const Morphism& f);

/// Evaluation M -> Hom(Hom(M, R), R); an isomorphism over finite factors.
Morphism double_dual_map(const Module& m);

/// Free module on the generators of m mapping onto it.
Morphism free_cover(const Module& m);

}  // namespace gfd
