#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gfd/complex.hpp"

namespace gfd {

/// Hom(X, Y)_n = sum over p of Hom(X_p, Y_{p+n}) with
/// d(f) = d^Y f - (-1)^n f d^X. Finite support makes the product a sum.
class HomComplex {
 public:
  HomComplex(Complex source, Complex target);

  const Complex& complex() const { return complex_; }
  const Complex& source() const { return src_; }
  const Complex& target() const { return tgt_; }

  /// Degree-n element from its components f_p: X_p -> Y_{p+n}. Missing
  /// components are zero.
  Vec pack(int n, const std::map<int, Morphism>& parts) const;
  /// Component f_p of a degree-n element.
  Morphism component(int n, const Vec& element, int p) const;
  std::map<int, Morphism> unpack(int n, const Vec& element) const;

  /// A degree-0 cycle read as a chain map and back.
  ChainMap to_chain_map(const Vec& element) const;
  Vec from_chain_map(const ChainMap& f) const;

 private:
  struct Block {
    int p;
    HomSpace space;
    int offset;
  };
  const std::vector<Block>& blocks(int n) const;

  Complex src_, tgt_, complex_;
  int lo_ = 0;
  std::vector<std::vector<Block>> blocks_;
};

/// Hom(c, Y): Hom(X, Y) -> Hom(X', Y) for c: X' -> X.
ChainMap hom_precompose(const HomComplex& from, const HomComplex& to, const ChainMap& c);
/// Hom(X, c): Hom(X, Y) -> Hom(X, Y') for c: Y -> Y'.
ChainMap hom_postcompose(const HomComplex& from, const HomComplex& to, const ChainMap& c);

/// (X (x) Y)_n = sum over t of X_t (x) Y_{n-t} with
/// d(x (x) y) = dx (x) y + (-1)^t x (x) dy.
class TensorComplex {
 public:
  TensorComplex(Complex left, Complex right);
  const Complex& complex() const { return complex_; }

 private:
  Complex left_, right_, complex_;
};

/// (C^+)_n = (C_{-n})^+ with the dualized differentials. Finite rings only.
Complex dual_complex(const Complex& c);
/// f^+: Y^+ -> X^+ for f: X -> Y.
ChainMap dual_map(const ChainMap& f, const Complex& dual_source, const Complex& dual_target);

/// Mapping cone of u: P -> G in the indexing M(u)_n = G_{n+1} (+) P_n with
/// delta(x, y) = (g x + u y, -f y). It sits in the degreewise split
/// sequence 0 -> G[-1] -> M(u) -> P -> 0, where G[-1] = shift(G, -1).
struct Cone {
  ChainMap u;
  Complex complex;
  ChainMap inclusion;   // shift(G, -1) -> M(u), x |-> ((-1)^n x, 0)
  ChainMap projection;  // M(u) -> P, (x, y) |-> (-1)^n y
  /// Degree-n split: components {G_{n+1}, P_n}.
  std::vector<Module> parts(int n) const;
};
Cone mapping_cone(const ChainMap& u);

/// The usual cone Cone(u)_n = G_n (+) P_{n-1}, same differential formula.
/// Used to glue resolutions; Cone(u) = M(u) moved up one degree.
Complex standard_cone(const ChainMap& u);

/// Chain map between cones of the form (x, y) |-> (a x + t y, b y), with
/// t_n: P_n -> G'_{n+1}. Construction verifies commutation.
ChainMap cone_map(const Cone& from, const Cone& to, const ChainMap& a, const ChainMap& b,
                  const std::function<Morphism(int)>& t);

/// Direct sum of complexes and of chain maps.
Complex direct_sum(const Complex& a, const Complex& b);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
/// Inclusion of the first / second summand and the two projections.
ChainMap sum_inclusion(const Complex& a, const Complex& b, int which);
ChainMap sum_projection(const Complex& a, const Complex& b, int which);

/// The complex of kernels ker(phi_n) with the induced differentials.
struct KernelComplex {
  Complex complex;
  ChainMap inclusion;  // into phi.source()
  std::vector<Kernel> kernels;
  int lo = 0;
  const Kernel& at(int n) const { return kernels[static_cast<std::size_t>(n - lo)]; }
};
KernelComplex kernel_complex(const ChainMap& phi);
/// The restriction of c: X -> Y to kernel complexes of maps out of X and Y
/// (c must carry the first kernel into the second).
ChainMap induced_on_kernels(const ChainMap& c, const KernelComplex& a, const KernelComplex& b);

/// 0 -> A --i--> B --p--> C -> 0; the check is degreewise (injective,
/// surjective, exact in the middle).
struct ShortExactSequence {
  ChainMap i, p;
  bool verify() const;
};

/// A finite exact-sequence candidate: objects[k] --maps[k]--> objects[k+1].
struct SequenceReport {
  std::vector<std::string> labels;
  std::vector<Module> objects;
  std::vector<Morphism> maps;
  /// exact[k] refers to objects[k]; the two ends are not checked.
  std::vector<std::optional<bool>> exact;
  int checked() const;
  int failures() const;
};

/// The homology long exact sequence of a short exact sequence of complexes,
/// H_hi(A) -> H_hi(B) -> H_hi(C) -> H_{hi-1}(A) -> ... -> H_lo(C), with the
/// connecting maps built from explicit lifts.
SequenceReport homology_les(const ShortExactSequence& ses, int lo, int hi);

/// Connecting map H_n(C) -> H_{n-1}(A).
Morphism connecting_map(const ShortExactSequence& ses, int n);

struct ChainMapAnalysis {
  std::map<int, Morphism> induced;
  bool is_quasi_iso = true;
  std::vector<int> failing_degrees;
};
/// Induced maps in degrees [lo, hi] (defaults to the union of supports).
ChainMapAnalysis analyze_chain_map(const ChainMap& f, std::optional<int> lo = std::nullopt,
                                   std::optional<int> hi = std::nullopt);

/// Solves f - g = d s + s d. With `top`, the equation is imposed only in
/// degrees <= top (for windowed resolutions whose top degree is a
/// truncation artifact).
std::optional<Homotopy> solve_homotopy(const ChainMap& f, const ChainMap& g,
                                       std::optional<int> top = std::nullopt);

/// A chain map h: X -> G with phi h = f, solved globally on Hom(X, G)_0.
/// With an rng, a random element of the solution space is returned instead
/// of the solver's particular solution.
std::optional<ChainMap> solve_lift(const ChainMap& f, const ChainMap& phi,
                                   std::mt19937_64* rng = nullptr);

/// Extends a: A -> Q along b: A -> B, i.e. finds c: B -> Q with c b = a.
std::optional<Morphism> extend_along(const Morphism& a, const Morphism& b);

enum class StructuralClass { dg_projective, dg_flat, dg_injective, projective_complex, flat_complex };
std::string to_string(StructuralClass c);
StructuralClass structural_class_from_string(const std::string& s);

struct StructuralVerdict {
  bool member = false;
  std::string certificate;
};
StructuralVerdict structural_class(const Complex& c, StructuralClass k);

}  // namespace gfd
