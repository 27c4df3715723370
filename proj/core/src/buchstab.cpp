#include "kummerlab/buchstab.hpp"

#include <algorithm>
#include <bit>

#include "kummerlab/errors.hpp"
#include "kummerlab/parallel.hpp"
#include "kummerlab/primes.hpp"

namespace kummerlab {

namespace {

using u64 = std::uint64_t;

BuchstabResult evaluate(const std::vector<u64>& primes, u64 M, u64 K) {
  BuchstabResult r;
  const bool all_in_band = std::all_of(primes.begin(), primes.end(),
                                       [&](u64 p) { return p > M && p <= K; });
  const bool all_above = std::all_of(primes.begin(), primes.end(), [&](u64 p) { return p > M; });
  r.lhs = all_in_band ? 1 : 0;
  // mu(d) over the divisors d of n whose primes all exceed CM
  std::vector<u64> rough;
  for (u64 p : primes) {
    if (p > K) rough.push_back(p);
  }
  int mobius_sum = 0;
  for (u64 mask = 0; mask < (u64{1} << rough.size()); ++mask) {
    mobius_sum += std::popcount(mask) % 2 == 0 ? 1 : -1;
  }
  r.rhs = all_above ? mobius_sum : 0;
  return r;
}

u64 band_top(u64 M, const ExactRational& C) {
  if (!(C > ExactRational(1))) throw ValidationError("Buchstab check needs C > 1");
  return *to_u64((C * ExactRational(big_from_u64(M), 1)).floor());
}

}  // namespace

BuchstabResult buchstab_check(u64 n, u64 M, const ExactRational& C) {
  if (n == 0) throw ValidationError("Buchstab check needs n >= 1");
  std::vector<u64> primes;
  for (const auto& [p, e] : factor_u64(n)) {
    if (e > 1) throw ValidationError(std::to_string(n) + " is not squarefree");
    primes.push_back(p);
  }
  return evaluate(primes, M, band_top(M, C));
}

BuchstabScan buchstab_scan(std::uint32_t limit, u64 M, const ExactRational& C, unsigned workers) {
  const u64 K = band_top(M, C);
  const std::vector<std::uint32_t> lpf = least_prime_factors(limit);
  constexpr u64 kBlock = 1 << 14;
  const u64 n_blocks = (static_cast<u64>(limit) + kBlock) / kBlock;
  std::vector<BuchstabScan> parts(n_blocks);
  parallel_blocks(n_blocks, workers, [&](std::size_t b) {
    const u64 lo = std::max<u64>(1, b * kBlock);
    const u64 hi = std::min<u64>(limit, (b + 1) * kBlock - 1);
    std::vector<u64> primes;
    for (u64 n = lo; n <= hi; ++n) {
      primes.clear();
      u64 x = n;
      bool squarefree = true;
      while (x > 1) {
        const u64 p = lpf[x];
        x /= p;
        if (x % p == 0) {
          squarefree = false;
          break;
        }
        primes.push_back(p);
      }
      if (!squarefree) continue;
      ++parts[b].checked;
      if (!evaluate(primes, M, K).equal()) parts[b].failures.push_back(n);
    }
  });
  BuchstabScan out;
  for (auto& p : parts) {
    out.checked += p.checked;
    out.failures.insert(out.failures.end(), p.failures.begin(), p.failures.end());
  }
  return out;
}

}  // namespace kummerlab
