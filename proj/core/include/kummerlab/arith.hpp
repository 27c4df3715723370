#pragma once

#include <cstdint>

#include "kummerlab/bigint.hpp"
#include "kummerlab/factored.hpp"

namespace kummerlab {

/// Per-prime exponents of the local construction.
///   alpha = largest a with p^a <= M
///   beta  = 1 + largest a with p^a <= K
///   B = beta - alpha,  m = p^B
struct LocalExponents {
  std::uint64_t p = 0;
  unsigned alpha = 0;
  unsigned beta = 0;
  unsigned B = 0;
  std::uint64_t m = 0;

  bool operator==(const LocalExponents&) const = default;
};

/// Requires p prime, p <= K, M >= 2, K >= M.
LocalExponents alpha_beta(std::uint64_t p, std::uint64_t M, std::uint64_t K);

/// lcm(1..M) as { p : floor(log_p M) }.
FactoredNat lcm_factored(std::uint64_t M);

/// v_p(M!) by Legendre's formula.
std::uint64_t legendre_valuation(std::uint64_t M, std::uint64_t p);

/// M! / lcm(1..M), exponents v_p(M!) - alpha_p (zero entries omitted).
FactoredNat qm_factored(std::uint64_t M);

/// lcm(1..M) mod p via Wilson's theorem: with d = p - M,
/// (-1)^d ((d-1)! * Q_M)^{-1} mod p. Requires p prime, p > M.
std::uint64_t wilson_lm_residue(std::uint64_t M, std::uint64_t p);

/// log lcm(1..M) = sum over p <= M of alpha_p log p.
long double chebyshev_psi(std::uint64_t M);

}  // namespace kummerlab
