#include "kummerlab/modular.hpp"

#include <set>

#include "kummerlab/errors.hpp"

namespace kummerlab {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw ValidationError("inverse modulo 0");
  if (m == 1) return 0;
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw ValidationError(std::to_string(a) + " is not invertible modulo " +
                          std::to_string(m));
  }
  __int128 mm = static_cast<__int128>(m);
  old_s %= mm;
  if (old_s < 0) old_s += mm;
  return static_cast<std::uint64_t>(old_s);
}

std::uint64_t reduce_signed(std::int64_t a, std::uint64_t m) {
  const __int128 mm = static_cast<__int128>(m);
  __int128 r = static_cast<__int128>(a) % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

std::int64_t signed_rep(std::uint64_t a, std::uint64_t m) {
  a %= m;
  if (a > m / 2) return -static_cast<std::int64_t>(m - a);
  return static_cast<std::int64_t>(a);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

CrtResult crt_combine(std::span<const CrtInput> pairs) {
  std::set<std::uint64_t> seen;
  BigInt residue = 0;
  BigInt modulus = 1;
  for (const auto& pair : pairs) {
    if (!seen.insert(pair.modulus.p).second) {
      throw ValidationError("crt_combine: repeated prime " +
                            std::to_string(pair.modulus.p));
    }
    const BigInt q = pair.modulus.value();
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), pair.residue.get_mpz_t(), q.get_mpz_t());
    // residue + modulus * s == r (mod q)
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), q.get_mpz_t());
    BigInt s = (r - residue) * inv;
    mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), q.get_mpz_t());
    residue += modulus * s;
    modulus *= q;
  }
  return {residue, modulus};
}

}  // namespace kummerlab
