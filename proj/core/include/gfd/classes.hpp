#pragma once

#include <string>
#include <vector>

#include "gfd/extint.hpp"
#include "gfd/module.hpp"

namespace gfd {

enum class ClassName {
  projective,
  flat,
  injective,
  gorenstein_projective,
  gorenstein_flat,
  gorenstein_injective
};

std::string to_string(ClassName c);
ClassName class_from_string(const std::string& s);

struct Membership {
  bool member = false;
  std::string certificate;
  explicit operator bool() const { return member; }
};

/// Per-ring decision procedure. Over the finite chain factors (quasi-
/// Frobenius) projective = flat = injective = free and every module is
/// Gorenstein projective/flat/injective. Over the integers f.g. projective
/// = flat = free, only 0 is injective, and the Gorenstein classes coincide
/// with the classical ones.
Membership class_membership(const Module& m, ClassName c);

enum class DimKind { pd, fd, gpd, gfd, gid };
std::string to_string(DimKind k);

struct ModuleDimension {
  ExtInt value;
  /// "zero-module" for the zero module (value -inf), otherwise a short
  /// description of the witness.
  std::string certificate;
};

/// Kernel of the free cover of m.
Module syzygy(const Module& m);

/// Dimension via iterated syzygies; an infinite answer is certified by a
/// repeating syzygy isomorphism class that contains no projective.
ModuleDimension module_dimension(const Module& m, DimKind kind);

}  // namespace gfd
