#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kummerlab/bigint.hpp"
#include "kummerlab/factored.hpp"
#include "kummerlab/residue_system.hpp"

namespace kummerlab {

/// Levels a >= 1 at which k mod p^a > n mod p^a (Kummer carries of k + (n-k)
/// in base p). Enumeration stops at `stop_level`, the first a with p^a > k
/// and n mod p^a >= k; no carry can occur above it.
struct CarryProfile {
  std::uint64_t p = 0;
  std::vector<unsigned> carry_levels;
  unsigned stop_level = 0;

  unsigned count() const noexcept { return static_cast<unsigned>(carry_levels.size()); }
};

CarryProfile carry_count(const BigInt& n, std::uint64_t k, std::uint64_t p);
/// Throws MissingLevels(p) if the stored levels of p cannot certify the stop.
CarryProfile carry_count(const ResidueSystem& n, std::uint64_t k, std::uint64_t p,
                         std::optional<unsigned> level_cap = std::nullopt);

/// binom(n, k) = u * v with u supported on primes <= k, v on primes > k.
struct SmoothSplit {
  BigInt n;
  std::uint64_t k = 0;
  FactoredNat u;
  FactoredNat v;
};

/// Needs n <= kMaxSplitN so every prime <= n can be sieved.
inline constexpr std::uint64_t kMaxSplitN = 100'000'000;
SmoothSplit uv_split(const BigInt& n, std::uint64_t k);

/// log u_k(n) = sum over p <= k of (carries at p) * log p.
long double log_u(const BigInt& n, std::uint64_t k,
                  std::optional<unsigned> level_cap = std::nullopt);
long double log_u(const ResidueSystem& n, std::uint64_t k,
                  std::optional<unsigned> level_cap = std::nullopt);

/// Smooth part u_k(n) as a factorization.
FactoredNat smooth_part(const BigInt& n, std::uint64_t k);

/// Least k <= k_max (default n) with u_k(n) > n^2, or nullopt.
/// The k-loop runs on `workers` threads with a deterministic least-k result.
std::optional<std::uint64_t> f_exact(const BigInt& n,
                                     std::optional<std::uint64_t> k_max = std::nullopt,
                                     unsigned workers = 1);

/// Certificate that u_k(n) <= n^2 for every 0 <= k <= K.
struct FLowerCertificate {
  std::uint64_t K = 0;
  bool passed = false;
  long double log_n = 0;
  /// log u_k(n) for k = 0..K.
  std::vector<long double> log_u_by_k;
  std::uint64_t argmax_k = 0;
  /// log(n^2 / u_k) at argmax_k.
  long double margin = 0;
  std::optional<std::uint64_t> first_violation;
  /// True when every comparison was settled on exact integers.
  bool exact = false;
};

FLowerCertificate verify_f_lower(const BigInt& n, std::uint64_t K, unsigned workers = 1);
/// log n is taken from the residue system's log_value (MissingLogValue if absent).
FLowerCertificate verify_f_lower(const ResidueSystem& n, std::uint64_t K,
                                 unsigned workers = 1);

}  // namespace kummerlab
