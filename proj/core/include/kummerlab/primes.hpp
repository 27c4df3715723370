#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kummerlab {

/// Primes <= limit in ascending order (sieve of Eratosthenes).
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Trial-division factorization, ascending primes. Intended for the
/// desk-scale inputs used here (p - 1 for p <= ~10^12).
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// p^a if it fits in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned a);

/// Largest a with p^a <= x, by repeated multiplication (p >= 2, x >= 1).
unsigned floor_log(std::uint64_t p, std::uint64_t x);

/// Least-prime-factor table for 0..limit (entries 0 and 1 are 0).
std::vector<std::uint32_t> least_prime_factors(std::uint32_t limit);

}  // namespace kummerlab
