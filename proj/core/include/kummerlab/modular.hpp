#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kummerlab/bigint.hpp"
#include "kummerlab/factored.hpp"

namespace kummerlab {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse modulo m; throws ValidationError when gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Least nonnegative representative of a signed value.
std::uint64_t reduce_signed(std::int64_t a, std::uint64_t m);

/// Signed representative in (-m/2, m/2].
std::int64_t signed_rep(std::uint64_t a, std::uint64_t m);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

struct CrtInput {
  BigInt residue;
  PrimePower modulus;
};

struct CrtResult {
  BigInt residue;
  BigInt modulus;
};

/// Combines residues at pairwise distinct primes into the unique residue
/// modulo the product. Throws ValidationError on a repeated prime.
CrtResult crt_combine(std::span<const CrtInput> pairs);

}  // namespace kummerlab
