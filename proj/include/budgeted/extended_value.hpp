#pragma once

#include <compare>
#include <limits>
#include <string>

namespace budgeted {

// A real number or negative infinity. Negative infinity is the value of a
// max over an empty adversary set and compares below every real.
class ExtendedValue {
 public:
  constexpr ExtendedValue() = default;
  constexpr explicit ExtendedValue(double v) : v_(v) {}

  static constexpr ExtendedValue neg_infinity() {
    return ExtendedValue(-std::numeric_limits<double>::infinity());
  }

  constexpr bool is_neg_infinity() const {
    return v_ == -std::numeric_limits<double>::infinity();
  }
  constexpr double value() const { return v_; }

  constexpr bool is_negative() const { return v_ < 0.0; }

  friend constexpr bool operator==(ExtendedValue a, ExtendedValue b) {
    return a.v_ == b.v_;
  }
  friend constexpr std::partial_ordering operator<=>(ExtendedValue a,
                                                     ExtendedValue b) {
    return a.v_ <=> b.v_;
  }

  // "-inf" for the sentinel, otherwise fixed notation with `decimals` places.
  std::string to_string(int decimals = 6) const;

 private:
  double v_ = -std::numeric_limits<double>::infinity();
};

}  // namespace budgeted
