#include "kummerlab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kummerlab/errors.hpp"
#include "kummerlab/modular.hpp"
#include "kummerlab/primes.hpp"

namespace kummerlab {

namespace {

using u64 = std::uint64_t;

constexpr u64 kTableLimit = u64{1} << 22;

}  // namespace

u64 primitive_root(u64 p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = factor_u64(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root found");
}

DiscreteLog::DiscreteLog(u64 p, u64 g) : p_(p), g_(g % p) {
  if (p <= kTableLimit) {
    table_.assign(p, 0);
    u64 x = 1 % p;
    for (u64 k = 0; k + 1 < p; ++k) {
      table_[x] = static_cast<std::uint32_t>(k);
      x = mul_mod(x, g_, p);
    }
    return;
  }
  step_ = static_cast<u64>(std::ceil(std::sqrt(static_cast<long double>(p - 1))));
  u64 x = 1;
  for (u64 k = 0; k < step_; ++k) {
    baby_.emplace(x, k);
    x = mul_mod(x, g_, p);
  }
  giant_ = inv_mod(pow_mod(g_, step_, p), p);
}

u64 DiscreteLog::operator()(u64 x) const {
  x %= p_;
  if (x == 0) throw ValidationError("discrete log of 0");
  if (!table_.empty()) return table_[x];
  u64 y = x;
  for (u64 i = 0; i <= step_; ++i) {
    if (auto it = baby_.find(y); it != baby_.end()) return (i * step_ + it->second) % (p_ - 1);
    y = mul_mod(y, giant_, p_);
  }
  throw InternalError("discrete log not found; g is not a primitive root");
}

Character::Character(u64 p, u64 j) : Character(p, primitive_root(p), j) {}

Character::Character(u64 p, u64 g, u64 j) : p_(p), g_(g), j_(0), d_(1) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (p > 2) {
    for (const auto& [q, e] : factor_u64(p - 1)) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        throw ValidationError(std::to_string(g) + " is not a primitive root mod " + std::to_string(p));
      }
    }
  }
  j_ = j % (p - 1);
  d_ = (p - 1) / gcd_u64(j_, p - 1);
  log_ = std::make_shared<const DiscreteLog>(p, g);
}

Character Character::power(u64 ell) const {
  Character c = *this;
  c.j_ = static_cast<u64>(static_cast<unsigned __int128>(j_) * ell % (p_ - 1));
  c.d_ = (p_ - 1) / gcd_u64(c.j_, p_ - 1);
  return c;
}

Character Character::conj() const { return power(p_ - 2); }

std::optional<u64> Character::class_of(u64 x) const {
  if (x % p_ == 0) return std::nullopt;
  if (d_ == 1) return 0;
  // j ind / (p-1) = (j / gcd) ind / d
  const u64 jr = j_ / ((p_ - 1) / d_);
  return static_cast<u64>(static_cast<unsigned __int128>(jr % d_) * ((*log_)(x) % d_) % d_);
}

std::complex<long double> Character::value(u64 x) const {
  const auto r = class_of(x);
  if (!r) return {0, 0};
  std::vector<u64> n(d_, 0);
  n[*r] = 1;
  return evaluate_classes(n);
}

std::complex<long double> evaluate_classes(const std::vector<u64>& n) {
  const u64 d = n.size();
  if (d == 0) return {0, 0};
  // equal counts sum to n_0 (1 + zeta + ... + zeta^{d-1}) = 0 exactly
  if (d > 1 && std::all_of(n.begin(), n.end(), [&](u64 x) { return x == n[0]; })) return {0, 0};
  long double re = static_cast<long double>(n[0]);
  long double im = 0;
  for (u64 r = 1; 2 * r < d; ++r) {
    const long double ang =
        2 * std::numbers::pi_v<long double> * static_cast<long double>(r) / static_cast<long double>(d);
    const long double pair_sum = static_cast<long double>(n[r] + n[d - r]);
    const long double pair_diff =
        static_cast<long double>(n[r]) - static_cast<long double>(n[d - r]);
    re += pair_sum * std::cos(ang);
    im += pair_diff * std::sin(ang);
  }
  if (d % 2 == 0) re -= static_cast<long double>(n[d / 2]);
  return {re, im};
}

std::vector<u64> class_counts(const std::vector<u64>& V, const Character& chi) {
  std::vector<u64> n(chi.order(), 0);
  for (u64 q : V) {
    const auto r = chi.class_of(q);
    if (!r) throw ValidationError(std::to_string(q) + " is divisible by the modulus");
    ++n[*r];
  }
  return n;
}

BandSum band_char_sum(const Character& chi, u64 ell, u64 M, const ExactRational& C) {
  const Character c = chi.power(ell);
  if (c.principal()) throw ValidationError("chi^ell is principal");
  if (!(C > ExactRational(1))) throw ValidationError("band needs C > 1");
  const u64 K = *to_u64((C * ExactRational(big_from_u64(M), 1)).floor());
  std::vector<u64> band;
  for (u64 q : sieve_primes(K)) {
    if (q > M && q != c.p()) band.push_back(q);
  }
  BandSum out;
  out.band = band.size();
  out.sum = evaluate_classes(class_counts(band, c));
  out.normalized = band.empty() ? 0 : std::abs(out.sum) / static_cast<long double>(band.size());
  return out;
}

MixingReport mixing_from_classes(const std::vector<u64>& counts, u64 k) {
  const u64 d = counts.size();
  if (d == 0) throw ValidationError("mixing needs at least one class");
  u64 size = 0;
  for (u64 c : counts) size += c;
  if (k < 1 || k + 1 > size) throw ValidationError("mixing needs 1 <= k <= |V| - 1");
  // coefficients of z^0..z^k, each in Z[x]/(x^d - 1)
  std::vector<std::vector<BigInt>> c(k + 1, std::vector<BigInt>(d, BigInt(0)));
  c[0][0] = 1;
  u64 deg = 0;
  for (u64 r = 0; r < d; ++r) {
    for (u64 rep = 0; rep < counts[r]; ++rep) {
      ++deg;
      for (u64 i = std::min(k, deg); i >= 1; --i) {
        for (u64 s = 0; s < d; ++s) {
          if (c[i - 1][s] != 0) c[i][(s + r) % d] += c[i - 1][s];
        }
      }
    }
  }
  MixingReport rep;
  rep.size = size;
  rep.d = d;
  rep.k = k;
  rep.counts = counts;
  rep.coeff = CyclotomicInteger::from_group_ring(static_cast<unsigned>(d), c[k]);
  rep.norm = rep.coeff.abs_squared().as_integer();
  rep.coeff_abs = rep.coeff.magnitude();
  mpz_bin_uiui(rep.binom_ref.get_mpz_t(), size, k);
  rep.ratio = rep.coeff_abs / ExactRational(rep.binom_ref, 1).to_long_double();
  rep.balanced = std::all_of(counts.begin(), counts.end(), [&](u64 x) { return x == counts[0]; });
  return rep;
}

MixingReport mixing_ratio(const std::vector<u64>& V, const Character& chi, u64 k) {
  return mixing_from_classes(class_counts(V, chi), k);
}

std::vector<BurgessRow> burgess_profile(const Character& chi, const std::vector<u64>& x0_grid,
                                        const std::vector<u64>& y_grid) {
  std::vector<BurgessRow> rows;
  for (u64 x0 : x0_grid) {
    for (u64 y : y_grid) {
      if (y < 1) throw ValidationError("interval length must be >= 1");
      std::vector<u64> n(chi.order(), 0);
      for (u64 x = x0 + 1; x <= x0 + y; ++x) {
        if (auto r = chi.class_of(x)) ++n[*r];
      }
      BurgessRow row{x0, y, evaluate_classes(n), 0};
      row.normalized = std::abs(row.sum) / static_cast<long double>(y);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace kummerlab
