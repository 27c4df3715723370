#include "kummerlab/kummer.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "kummerlab/errors.hpp"
#include "kummerlab/parallel.hpp"
#include "kummerlab/primes.hpp"

namespace kummerlab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Base-p digits of n, least significant first. `complete` means every
/// digit of n is present (higher digits are zero).
struct Digits {
  std::vector<u64> d;
  bool complete = true;
};

Digits digits_of(const BigInt& n, u64 p, std::optional<unsigned> cap = std::nullopt) {
  Digits out;
  // peel e digits at a time with the 64-bit divisor p^e
  unsigned e = 0;
  u64 chunk_mod = 1;
  while (chunk_mod <= std::numeric_limits<u64>::max() / p) {
    chunk_mod *= p;
    ++e;
  }
  BigInt q = n;
  while (sgn(q) > 0) {
    u64 rem = mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), chunk_mod);
    const bool last = sgn(q) == 0;
    for (unsigned i = 0; i < e; ++i) {
      if (last && rem == 0) break;
      out.d.push_back(rem % p);
      rem /= p;
    }
  }
  // a cap hides the levels above it, as if only p^1..p^cap were known
  if (cap && out.d.size() > *cap) {
    out.d.resize(*cap);
    out.complete = false;
  }
  return out;
}

/// Carry scan over a digit expansion. Throws MissingLevels when the digits
/// run out before the stop rule fires on an incomplete expansion.
CarryProfile scan_carries(const Digits& digits, u64 k, u64 p) {
  CarryProfile prof;
  prof.p = p;
  if (k == 0) {
    prof.stop_level = 1;
    return prof;
  }
  u64 pa_prev = 1;        // p^{a-1}, saturated once above k
  bool pa_prev_big = false;
  u64 r = 0;              // n mod p^{a-1}, tracked while below k
  bool r_big = false;
  for (unsigned a = 1;; ++a) {
    u64 d = 0;
    if (a - 1 < digits.d.size()) {
      d = digits.d[a - 1];
    } else if (!digits.complete) {
      throw MissingLevels(p);
    }
    if (d > 0 && !r_big) {
      if (pa_prev_big) {
        r_big = true;
      } else {
        const u128 nr = static_cast<u128>(r) + static_cast<u128>(d) * pa_prev;
        if (nr > k) {
          r_big = true;
        } else {
          r = static_cast<u64>(nr);
        }
      }
    }
    bool pa_big = pa_prev_big;
    u64 pa = pa_prev;
    if (!pa_big) {
      const u128 next = static_cast<u128>(pa_prev) * p;
      if (next > k) {
        pa_big = true;
      } else {
        pa = static_cast<u64>(next);
      }
    }
    const u64 k_mod = pa_big ? k : k % pa;
    if (!r_big && k_mod > r) prof.carry_levels.push_back(a);
    if (pa_big && (r_big || r >= k)) {
      prof.stop_level = a;
      return prof;
    }
    pa_prev = pa;
    pa_prev_big = pa_big;
  }
}

Digits digits_of_residues(const ResidueSystem& rs, u64 p, std::optional<unsigned> cap) {
  unsigned top = rs.max_level(p);
  if (cap) top = std::min(top, *cap);
  Digits out;
  out.complete = false;
  if (top == 0) return out;
  const BigInt r = *rs.residue(p, top);
  Digits full = digits_of(r, p);
  out.d = std::move(full.d);
  out.d.resize(top, 0);
  return out;
}

/// Per-prime digit cache for one explicit n.
class DigitCache {
 public:
  explicit DigitCache(const BigInt& n) : n_(n) {}

  const Digits& get(u64 p) {
    auto it = cache_.find(p);
    if (it == cache_.end()) it = cache_.emplace(p, digits_of(n_, p)).first;
    return it->second;
  }

 private:
  const BigInt& n_;
  std::map<u64, Digits> cache_;
};

/// Smooth part of binom(n, k) from precomputed digit expansions of the primes <= k.
struct SmoothEval {
  std::vector<std::pair<u64, unsigned>> factors;
  long double log = 0;
};

SmoothEval eval_smooth(const std::vector<u64>& primes, const std::vector<const Digits*>& digits,
                       u64 k) {
  SmoothEval ev;
  for (std::size_t i = 0; i < primes.size() && primes[i] <= k; ++i) {
    const unsigned c = scan_carries(*digits[i], k, primes[i]).count();
    if (c > 0) {
      ev.factors.emplace_back(primes[i], c);
      ev.log += c * std::log(static_cast<long double>(primes[i]));
    }
  }
  return ev;
}

BigInt materialize(const SmoothEval& ev) {
  BigInt u = 1, pe;
  for (const auto& [p, c] : ev.factors) {
    mpz_ui_pow_ui(pe.get_mpz_t(), p, c);
    u *= pe;
  }
  return u;
}

constexpr long double kExactBits = 4096;
constexpr long double kTieTolerance = 1e-9L;

/// Compares u against n^2 exactly when u fits in 4096 bits, or when the
/// logs are within the tie tolerance; otherwise by long double logs.
/// Returns +1 if u > n^2, 0 if equal, -1 if less.
int compare_to_square(const SmoothEval& ev, const BigInt& n_sq, long double log_n,
                      bool* used_exact) {
  const long double diff = ev.log - 2 * log_n;
  if (ev.log <= kExactBits * std::log(2.0L) || std::fabs(diff) < kTieTolerance) {
    *used_exact = true;
    const int c = cmp(materialize(ev), n_sq);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
  }
  *used_exact = false;
  return diff > 0 ? 1 : -1;
}

}  // namespace

CarryProfile carry_count(const BigInt& n, u64 k, u64 p) {
  if (sgn(n) < 0) throw ValidationError("carry_count requires n >= 0");
  if (cmp(n, big_from_u64(k)) < 0) throw ValidationError("carry_count requires k <= n");
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  return scan_carries(digits_of(n, p), k, p);
}

CarryProfile carry_count(const ResidueSystem& n, u64 k, u64 p, std::optional<unsigned> level_cap) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  return scan_carries(digits_of_residues(n, p, level_cap), k, p);
}

SmoothSplit uv_split(const BigInt& n, u64 k) {
  auto nn = to_u64(n);
  if (!nn || *nn > kMaxSplitN) {
    throw ValidationError("uv_split requires 0 <= n <= " + std::to_string(kMaxSplitN));
  }
  if (k > *nn) throw ValidationError("uv_split requires k <= n");
  SmoothSplit split;
  split.n = n;
  split.k = k;
  FactoredNat::Map u, v;
  for (u64 p : sieve_primes(*nn)) {
    const unsigned c = scan_carries(digits_of(n, p), k, p).count();
    if (c == 0) continue;
    (p <= k ? u : v).emplace(p, c);
  }
  split.u = FactoredNat(std::move(u));
  split.v = FactoredNat(std::move(v));
  return split;
}

long double log_u(const BigInt& n, u64 k, std::optional<unsigned> level_cap) {
  if (cmp(n, big_from_u64(k)) < 0) throw ValidationError("log_u requires k <= n");
  long double s = 0;
  for (u64 p : sieve_primes(k)) {
    Digits d = digits_of(n, p, level_cap);
    s += scan_carries(d, k, p).count() * std::log(static_cast<long double>(p));
  }
  return s;
}

long double log_u(const ResidueSystem& n, u64 k, std::optional<unsigned> level_cap) {
  long double s = 0;
  for (u64 p : sieve_primes(k)) {
    s += scan_carries(digits_of_residues(n, p, level_cap), k, p).count() *
         std::log(static_cast<long double>(p));
  }
  return s;
}

FactoredNat smooth_part(const BigInt& n, u64 k) {
  if (cmp(n, big_from_u64(k)) < 0) throw ValidationError("smooth_part requires k <= n");
  FactoredNat::Map m;
  for (u64 p : sieve_primes(k)) {
    const unsigned c = scan_carries(digits_of(n, p), k, p).count();
    if (c > 0) m.emplace(p, c);
  }
  return FactoredNat(std::move(m));
}

std::optional<u64> f_exact(const BigInt& n, std::optional<u64> k_max, unsigned workers) {
  if (sgn(n) < 1) throw ValidationError("f_exact requires n >= 1");
  u64 limit = k_max ? *k_max : to_u64(n).value_or(std::numeric_limits<u64>::max());
  if (auto nn = to_u64(n)) limit = std::min(limit, *nn);
  const BigInt n_sq = n * n;
  const long double log_n = log_big(n);
  DigitCache cache(n);

  constexpr u64 kBlock = 64;
  workers = std::max(1u, workers);
  std::vector<u64> primes;
  std::vector<const Digits*> digits;
  u64 sieved_to = 1;
  for (u64 k0 = 0; k0 <= limit;) {
    // one round: `workers` consecutive blocks of k
    const u64 round_end = std::min<u64>(limit, k0 + kBlock * workers - 1);
    if (round_end > sieved_to) {
      const u64 target = std::max<u64>(round_end, 2 * sieved_to);
      for (u64 p : sieve_primes(target)) {
        if (p > sieved_to) {
          primes.push_back(p);
          digits.push_back(&cache.get(p));
        }
      }
      sieved_to = target;
    }
    const std::size_t n_blocks = (round_end - k0) / kBlock + 1;
    std::vector<u64> found(n_blocks, std::numeric_limits<u64>::max());
    parallel_blocks(n_blocks, workers, [&](std::size_t b) {
      const u64 lo = k0 + b * kBlock;
      const u64 hi = std::min<u64>(round_end, lo + kBlock - 1);
      for (u64 k = lo; k <= hi; ++k) {
        bool exact = false;
        if (compare_to_square(eval_smooth(primes, digits, k), n_sq, log_n, &exact) > 0) {
          found[b] = k;
          return;
        }
      }
    });
    for (u64 f : found) {
      if (f != std::numeric_limits<u64>::max()) return f;
    }
    if (round_end == limit) break;
    k0 = round_end + 1;
  }
  return std::nullopt;
}

FLowerCertificate verify_f_lower(const BigInt& n, u64 K, unsigned workers) {
  if (sgn(n) < 1) throw ValidationError("verify_f_lower requires n >= 1");
  if (cmp(n, big_from_u64(K)) < 0) throw ValidationError("verify_f_lower requires K <= n");
  FLowerCertificate cert;
  cert.K = K;
  cert.log_n = log_big(n);
  const BigInt n_sq = n * n;
  DigitCache cache(n);
  std::vector<u64> primes = sieve_primes(K);
  std::vector<const Digits*> digits;
  for (u64 p : primes) digits.push_back(&cache.get(p));

  std::vector<SmoothEval> evals(K + 1);
  std::vector<int> verdicts(K + 1);
  std::vector<char> exact(K + 1);
  constexpr u64 kBlock = 32;
  parallel_blocks(K / kBlock + 1, workers, [&](std::size_t b) {
    for (u64 k = b * kBlock; k <= K && k < (b + 1) * kBlock; ++k) {
      evals[k] = eval_smooth(primes, digits, k);
      bool e = false;
      verdicts[k] = compare_to_square(evals[k], n_sq, cert.log_n, &e);
      exact[k] = e;
    }
  });
  cert.exact = true;
  cert.log_u_by_k.resize(K + 1);
  for (u64 k = 0; k <= K; ++k) {
    cert.log_u_by_k[k] = evals[k].log;
    if (evals[k].log > evals[cert.argmax_k].log) cert.argmax_k = k;
    if (verdicts[k] > 0 && !cert.first_violation) cert.first_violation = k;
    cert.exact = cert.exact && exact[k];
  }
  cert.margin = 2 * cert.log_n - evals[cert.argmax_k].log;
  cert.passed = !cert.first_violation.has_value();
  return cert;
}

FLowerCertificate verify_f_lower(const ResidueSystem& n, u64 K, unsigned workers) {
  if (!n.log_value()) throw MissingLogValue();
  FLowerCertificate cert;
  cert.K = K;
  cert.log_n = *n.log_value();
  cert.exact = false;
  const std::vector<u64> primes = sieve_primes(K);
  std::vector<Digits> digits;
  digits.reserve(primes.size());
  for (u64 p : primes) digits.push_back(digits_of_residues(n, p, std::nullopt));
  std::vector<const Digits*> ptrs;
  for (const auto& d : digits) ptrs.push_back(&d);

  cert.log_u_by_k.assign(K + 1, 0);
  constexpr u64 kBlock = 32;
  parallel_blocks(K / kBlock + 1, workers, [&](std::size_t b) {
    for (u64 k = b * kBlock; k <= K && k < (b + 1) * kBlock; ++k) {
      cert.log_u_by_k[k] = eval_smooth(primes, ptrs, k).log;
    }
  });
  for (u64 k = 0; k <= K; ++k) {
    const long double lu = cert.log_u_by_k[k];
    if (lu > cert.log_u_by_k[cert.argmax_k]) cert.argmax_k = k;
    // a near-tie cannot be settled without the integer, so it fails
    if (!cert.first_violation && lu > 2 * cert.log_n - kTieTolerance) cert.first_violation = k;
  }
  cert.margin = 2 * cert.log_n - cert.log_u_by_k[cert.argmax_k];
  cert.passed = !cert.first_violation.has_value();
  return cert;
}

}  // namespace kummerlab
