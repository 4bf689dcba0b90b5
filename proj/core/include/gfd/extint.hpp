#pragma once

#include <compare>
#include <string>

namespace gfd {

/// An integer extended by -inf and +inf; used for dimensions and sup H.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(int v) : kind_(Kind::finite), value_(v) {}  // NOLINT(implicit)

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::neg_inf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::pos_inf); }

  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  constexpr int value() const { return value_; }

  constexpr std::strong_ordering operator<=>(const ExtInt& o) const {
    if (kind_ != o.kind_) return rank() <=> o.rank();
    if (kind_ != Kind::finite) return std::strong_ordering::equal;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const ExtInt& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::finite || value_ == o.value_);
  }

  /// Adds a finite offset; infinities absorb it.
  constexpr ExtInt operator+(int d) const {
    return is_finite() ? ExtInt(value_ + d) : *this;
  }

  std::string to_string() const {
    if (kind_ == Kind::neg_inf) return "-inf";
    if (kind_ == Kind::pos_inf) return "inf";
    return std::to_string(value_);
  }

 private:
  enum class Kind { neg_inf, finite, pos_inf };
  constexpr explicit ExtInt(Kind k) : kind_(k) {}
  constexpr int rank() const { return kind_ == Kind::neg_inf ? 0 : kind_ == Kind::finite ? 1 : 2; }

  Kind kind_ = Kind::neg_inf;
  int value_ = 0;
};

}  // namespace gfd
