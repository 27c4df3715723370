#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "kummerlab/bigint.hpp"

namespace kummerlab {

/// Reduced fraction with positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long num) : value_(num) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& num, const BigInt& den);
  explicit ExactRational(const BigRational& q);

  /// Accepts "a/b", "a", or a finite decimal such as "0.9" or "-1.25e1",
  /// converted exactly.
  static ExactRational parse(std::string_view text);
  /// Exact binary value of a double (so 0.9 becomes 8106479329266893/2^53).
  static ExactRational from_double(double v);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const BigRational& value() const noexcept { return value_; }

  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }
  BigInt floor() const;
  BigInt ceil() const;
  /// x - floor(x), in [0, 1).
  ExactRational frac() const;
  /// Distance to the nearest integer, min(frac, 1 - frac).
  ExactRational distance_to_integer() const;
  bool is_integer() const { return value_.get_den() == 1; }

  /// "a/b", or "a" when the denominator is 1.
  std::string to_string() const;

  friend ExactRational operator+(const ExactRational& x, const ExactRational& y);
  friend ExactRational operator-(const ExactRational& x, const ExactRational& y);
  friend ExactRational operator*(const ExactRational& x, const ExactRational& y);
  friend ExactRational operator/(const ExactRational& x, const ExactRational& y);
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& x, const ExactRational& y) {
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& x,
                                          const ExactRational& y);

 private:
  BigRational value_{0};
};

}  // namespace kummerlab
