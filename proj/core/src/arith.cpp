#include "kummerlab/arith.hpp"

#include <cmath>

#include "kummerlab/errors.hpp"
#include "kummerlab/modular.hpp"
#include "kummerlab/primes.hpp"

namespace kummerlab {

LocalExponents alpha_beta(std::uint64_t p, std::uint64_t M, std::uint64_t K) {
  if (M < 2) throw ValidationError("alpha_beta requires M >= 2");
  if (K < M) throw ValidationError("alpha_beta requires K >= M");
  if (p > K) throw ValidationError("alpha_beta requires p <= K");
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  LocalExponents e;
  e.p = p;
  e.alpha = floor_log(p, M);
  e.beta = floor_log(p, K) + 1;
  e.B = e.beta - e.alpha;
  auto m = checked_pow(p, e.B);
  if (!m) throw ValidationError("m_p overflows 64 bits");
  e.m = *m;
  return e;
}

FactoredNat lcm_factored(std::uint64_t M) {
  if (M < 1) throw ValidationError("lcm_factored requires M >= 1");
  FactoredNat::Map m;
  for (std::uint64_t p : sieve_primes(M)) m.emplace(p, floor_log(p, M));
  return FactoredNat(std::move(m));
}

std::uint64_t legendre_valuation(std::uint64_t M, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::uint64_t q = M / p; q > 0; q /= p) v += q;
  return v;
}

FactoredNat qm_factored(std::uint64_t M) {
  if (M < 1) throw ValidationError("qm_factored requires M >= 1");
  FactoredNat::Map m;
  for (std::uint64_t p : sieve_primes(M)) {
    const std::uint64_t e = legendre_valuation(M, p) - floor_log(p, M);
    if (e > 0) m.emplace(p, static_cast<unsigned>(e));
  }
  return FactoredNat(std::move(m));
}

std::uint64_t wilson_lm_residue(std::uint64_t M, std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (p <= M) throw ValidationError("wilson_lm_residue requires p > M");
  const std::uint64_t d = p - M;
  std::uint64_t fact = 1 % p;
  for (std::uint64_t i = 2; i < d; ++i) fact = mul_mod(fact, i, p);
  const std::uint64_t q = M >= 1 ? qm_factored(M).residue(p) : 1 % p;
  const std::uint64_t inv = inv_mod(mul_mod(fact, q, p), p);
  return (d % 2 == 0) ? inv : (p - inv) % p;
}

long double chebyshev_psi(std::uint64_t M) {
  if (M < 1) throw ValidationError("chebyshev_psi requires M >= 1");
  long double s = 0;
  for (std::uint64_t p : sieve_primes(M)) {
    s += floor_log(p, M) * std::log(static_cast<long double>(p));
  }
  return s;
}

}  // namespace kummerlab
