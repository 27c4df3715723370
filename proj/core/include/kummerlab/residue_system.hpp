#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kummerlab/bigint.hpp"
#include "kummerlab/factored.hpp"

namespace kummerlab {

/// A (possibly huge) nonnegative integer known only through its residues
/// at a declared set of prime powers. Entries at p^a and p^b (a < b) must
/// be reductions of one integer.
class ResidueSystem {
 public:
  using Entries = std::map<PrimePower, BigInt>;

  ResidueSystem() = default;

  /// Reductions of n at p^a for every a in 1..levels(p).
  static ResidueSystem from_integer(const BigInt& n,
                                    const std::map<std::uint64_t, unsigned>& levels);

  /// Inserts a residue, validating 0 <= r < p^a and coherence with the
  /// entries already present for p.
  void set(PrimePower level, const BigInt& residue);

  const Entries& entries() const noexcept { return entries_; }
  /// Highest stored exponent for p, 0 when p is absent.
  unsigned max_level(std::uint64_t p) const;
  /// n mod p^a, derived from any stored level b >= a.
  std::optional<BigInt> residue(std::uint64_t p, unsigned a) const;
  std::vector<std::uint64_t> primes() const;

  /// Full pairwise coherence check over all stored levels.
  bool coherent() const;

  const std::optional<long double>& log_value() const noexcept { return log_value_; }
  void set_log_value(long double v);

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool operator==(const ResidueSystem&) const = default;

 private:
  Entries entries_;
  std::optional<long double> log_value_;
  std::string label_;
};

}  // namespace kummerlab
