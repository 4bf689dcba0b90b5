#pragma once

#include <stdexcept>
#include <string>

namespace gfd {

/// Base of every error raised by the workbench. `name()` is the stable
/// identifier rendered by the CLI ("NotAComplex", "LiftNotFound", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define GFD_DEFINE_ERROR(Type)                                        \
  class Type : public Error {                                         \
   public:                                                            \
    explicit Type(const std::string& what) : Error(#Type, what) {}    \
  };

// ring catalog
GFD_DEFINE_ERROR(NonPrimeBase)
GFD_DEFINE_ERROR(BadModulus)
GFD_DEFINE_ERROR(ArithmeticOverflow)
// modules
GFD_DEFINE_ERROR(RingMismatch)
GFD_DEFINE_ERROR(InfiniteRing)
GFD_DEFINE_ERROR(DimensionMismatch)
// complexes
GFD_DEFINE_ERROR(NotAComplex)
GFD_DEFINE_ERROR(DegreeGap)
GFD_DEFINE_ERROR(EndpointMismatch)
// resolutions / cohomology
GFD_DEFINE_ERROR(LiftNotFound)
GFD_DEFINE_ERROR(NoCompleteResolution)
GFD_DEFINE_ERROR(UnsupportedRing)
// documents
GFD_DEFINE_ERROR(ParseError)
GFD_DEFINE_ERROR(ValidationError)

#undef GFD_DEFINE_ERROR

}  // namespace gfd
