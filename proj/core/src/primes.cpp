#include "kummerlab/primes.hpp"

#include <limits>

#include "kummerlab/errors.hpp"
#include "kummerlab/modular.hpp"

namespace kummerlab {

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  if (limit > (1ull << 34)) throw ValidationError("sieve limit too large");
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  if (n == 0) throw ValidationError("cannot factor 0");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto strip = [&](std::uint64_t q) {
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e > 0) out.emplace_back(q, e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t q = 5; q <= n / q; q += 6) {
    strip(q);
    strip(q + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned a) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < a; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / p) return std::nullopt;
    v *= p;
  }
  return v;
}

unsigned floor_log(std::uint64_t p, std::uint64_t x) {
  if (p < 2) throw ValidationError("floor_log base must be >= 2");
  if (x < 1) throw ValidationError("floor_log argument must be >= 1");
  unsigned a = 0;
  std::uint64_t v = 1;
  while (v <= x / p) {  // v * p <= x without overflow
    v *= p;
    ++a;
  }
  return a;
}

std::vector<std::uint32_t> least_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> lpf(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (lpf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (lpf[j] == 0) lpf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return lpf;
}

}  // namespace kummerlab
