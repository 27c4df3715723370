#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "kummerlab/bigint.hpp"

namespace kummerlab {

struct PrimePower {
  std::uint64_t p = 2;
  unsigned a = 1;

  BigInt value() const;
  std::optional<std::uint64_t> value_u64() const;

  auto operator<=>(const PrimePower&) const = default;
};

/// Validates p prime and a >= 1.
PrimePower make_prime_power(std::uint64_t p, unsigned a);

/// A positive integer as a canonical prime -> exponent map. Exponents are
/// always >= 1, so two values are equal iff their maps are equal.
class FactoredNat {
 public:
  using Map = std::map<std::uint64_t, unsigned>;

  FactoredNat() = default;
  /// Validates keys prime and drops nothing: a zero exponent is rejected.
  explicit FactoredNat(Map factors);

  const Map& factors() const noexcept { return factors_; }
  unsigned exponent(std::uint64_t p) const;
  bool is_one() const noexcept { return factors_.empty(); }

  BigInt to_integer() const;
  /// Sum of exponent * log p.
  long double log() const;
  /// to_integer() mod m without materializing the integer.
  std::uint64_t residue(std::uint64_t m) const;

  /// "1" or "2^3*3^2*5*7".
  std::string to_string() const;
  static FactoredNat parse(std::string_view text);

  friend FactoredNat operator*(const FactoredNat& x, const FactoredNat& y);
  bool operator==(const FactoredNat&) const = default;

 private:
  Map factors_;
};

/// Full factorization of a 64-bit integer (n >= 1).
FactoredNat factor_nat(std::uint64_t n);

}  // namespace kummerlab
