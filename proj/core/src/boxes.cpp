#include "kummerlab/boxes.hpp"

#include <algorithm>

#include "kummerlab/arith.hpp"
#include "kummerlab/errors.hpp"
#include "kummerlab/modular.hpp"
#include "kummerlab/primes.hpp"
#include "kummerlab/symmetric.hpp"

namespace kummerlab {

namespace {

using u64 = std::uint64_t;

u64 product_mod(const std::vector<u64>& primes, u64 skip, u64 m) {
  u64 r = 1 % m;
  for (u64 q : primes) {
    if (q != skip) r = mul_mod(r, q % m, m);
  }
  return r;
}

std::vector<std::vector<u64>> subsets_of_size(const std::vector<u64>& items, unsigned a) {
  std::vector<std::vector<u64>> out;
  if (a > items.size()) return out;
  std::vector<std::size_t> idx(a);
  for (std::size_t i = 0; i < a; ++i) idx[i] = i;
  for (;;) {
    std::vector<u64> s;
    for (std::size_t i : idx) s.push_back(items[i]);
    out.push_back(std::move(s));
    std::size_t i = a;
    while (i > 0 && idx[i - 1] == items.size() - a + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < a; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Per-petal constants Q_M mod p and c_p.
struct PetalConstants {
  u64 q = 0;
  u64 c = 0;
};

/// h_p for every petal, or nullopt when some height vanishes.
std::optional<std::vector<std::int64_t>> heights_of(const std::vector<u64>& U,
                                                    const std::vector<u64>& A,
                                                    const std::vector<PetalConstants>& pc,
                                                    u64 r_abs, int sign) {
  std::vector<std::int64_t> h;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const u64 p = A[i];
    u64 rm = r_abs % p;
    if (sign < 0) rm = (p - rm) % p;
    const u64 num = mul_mod(rm, pc[i].q, p);
    const u64 den = mul_mod(mul_mod(pc[i].c, product_mod(U, 0, p), p), product_mod(A, p, p), p);
    const u64 hp = mul_mod(num, inv_mod(den, p), p);
    if (hp == 0) return std::nullopt;
    h.push_back(signed_rep(hp, p));
  }
  return h;
}

}  // namespace

BoxInstance make_box(u64 M, u64 K, std::vector<u64> U, std::vector<u64> A, const BigInt& r) {
  std::sort(U.begin(), U.end());
  std::sort(A.begin(), A.end());
  if (std::adjacent_find(U.begin(), U.end()) != U.end() ||
      std::adjacent_find(A.begin(), A.end()) != A.end()) {
    throw ValidationError("box prime sets must not repeat primes");
  }
  for (u64 q : U) {
    if (!is_prime(q)) throw ValidationError("core entry " + std::to_string(q) + " is not prime");
    if (std::binary_search(A.begin(), A.end(), q)) throw ValidationError("U and A must be disjoint");
  }
  BoxInstance box;
  box.M = M;
  box.K = K;
  for (u64 p : A) {
    if (!is_prime(p) || p <= M || p > K) {
      throw ValidationError("petal " + std::to_string(p) + " is not a prime in (M, K]");
    }
    box.P_A *= big_from_u64(p);
  }
  for (u64 q : U) box.P_U *= big_from_u64(q);
  if (r == 0) throw ValidationError("box numerator must be nonzero");
  BigInt g;
  const BigInt P = box.P_U * box.P_A;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
  if (g != 1) throw ValidationError("box numerator must be coprime to P_U P_A");
  box.U = std::move(U);
  box.A = std::move(A);
  box.r = r;
  return box;
}

u64 c_p(u64 p, u64 M) {
  if (p <= M) throw ValidationError("c_p needs p > M");
  u64 fact = 1 % p;
  for (u64 i = 2; i + M + 1 <= p; ++i) fact = mul_mod(fact, i, p);
  const u64 inv = inv_mod(fact, p);
  return (p - M) % 2 == 0 ? inv : (p - inv) % p;
}

HeightResult qm_box_height(u64 p, const BoxInstance& box) {
  if (!std::binary_search(box.A.begin(), box.A.end(), p)) {
    throw ValidationError("prime " + std::to_string(p) + " is not a petal of the box");
  }
  HeightResult res;
  const u64 q = qm_factored(box.M).residue(p);
  const u64 cp = c_p(p, box.M);
  const u64 pu = product_mod(box.U, 0, p);
  const u64 rest = product_mod(box.A, p, p);
  const u64 lhs = mul_mod(mod_u64(box.r, p), q, p);
  const u64 hp = mul_mod(lhs, inv_mod(mul_mod(mul_mod(cp, pu, p), rest, p), p), p);
  if (hp != 0) res.h = signed_rep(hp, p);
  // unreduced form with P_U P_A / p evaluated as an integer
  const BigInt cof = box.P_U * box.P_A / big_from_u64(p);
  const u64 rhs = mul_mod(mul_mod(reduce_signed(res.h.value_or(0), p), cp, p), mod_u64(cof, p), p);
  res.forms_agree = rhs == lhs;
  return res;
}

BigInt rho_u(const BoxInstance& box) {
  if (box.U.empty()) return 0;
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), box.P_A.get_mpz_t(), box.P_U.get_mpz_t()) == 0) {
    throw ValidationError("P_A is not invertible mod P_U");
  }
  BigInt out = box.r * inv % box.P_U;
  if (out < 0) out += box.P_U;
  return out;
}

CensusResult t_r_census(const FourierContext& ctx, const std::vector<u64>& U,
                        const std::vector<u64>& W, unsigned a, u64 R, const BigInt& xi,
                        u64 budget) {
  const u64 M = ctx.params.M;
  const u64 K = ctx.params.K;
  std::vector<u64> petals = W;
  std::sort(petals.begin(), petals.end());
  std::map<u64, LocalFourier> local;
  std::vector<long double> lstar;
  std::vector<long double> lstar_q;
  for (u64 p : petals) {
    if (p <= M || p > K || !is_prime(p)) {
      throw ValidationError("petal " + std::to_string(p) + " is not a prime in (M, K]");
    }
    auto it = local.emplace(p, local_fourier(LocalSet::build(p, ctx.params))).first;
    lstar.push_back(it->second.l_star());
    lstar_q.push_back(lstar.back() / static_cast<long double>(p));
  }
  if (a > petals.size()) throw ValidationError("census size a exceeds |W|");
  BigInt PU = 1;
  for (u64 q : U) PU *= big_from_u64(q);
  const auto pu = to_u64(PU);
  if (!pu) throw ValidationError("P_U must fit in 64 bits");
  if (xi < 0 || xi >= PU) throw ValidationError("xi must lie in [0, P_U)");

  CensusResult out;
  out.e_term = elem_sym(lstar, a);
  out.tail_term = 2 * static_cast<long double>(R) / static_cast<long double>(*pu) *
                  elem_sym(lstar_q, a);
  if (a == 0) return out;

  const auto subsets = subsets_of_size(petals, a);
  const long double work = static_cast<long double>(subsets.size()) * 2 *
                           (static_cast<long double>(R) / static_cast<long double>(*pu) + 1);
  if (work > static_cast<long double>(budget)) {
    throw BudgetExceeded("census needs about " + std::to_string(static_cast<u64>(work)) +
                         " candidates, budget " + std::to_string(budget));
  }
  for (u64 q : U) {
    if (std::binary_search(petals.begin(), petals.end(), q)) {
      throw ValidationError("U and W must be disjoint");
    }
  }
  const FactoredNat Q = qm_factored(M);
  const u64 x = *to_u64(xi);
  long double weighted = 0;
  for (const auto& A : subsets) {
    std::vector<PetalConstants> pc;
    u64 pa = 1 % *pu;
    for (u64 p : A) {
      pc.push_back({Q.residue(p), c_p(p, M)});
      pa = mul_mod(pa, p % *pu, *pu);
    }
    const u64 cls = mul_mod(x, pa, *pu);  // r = xi P_A mod P_U
    for (int sign : {1, -1}) {
      // |r| in (R, 2R] with sign * |r| = cls mod P_U
      const u64 target = sign == 1 ? cls : (*pu - cls) % *pu;
      u64 s = R + 1;
      s += (target + *pu - s % *pu) % *pu;
      for (; s <= 2 * R; s += *pu) {
        bool coprime = true;
        for (u64 q : U) coprime = coprime && s % q != 0;
        for (u64 p : A) coprime = coprime && s % p != 0;
        if (!coprime) continue;
        const auto h = heights_of(U, A, pc, s, sign);
        if (!h) continue;
        long double w = 1;
        for (std::size_t i = 0; i < A.size(); ++i) w *= local.at(A[i]).prefix_weight((*h)[i]);
        ++out.boxes;
        weighted += w;
      }
    }
  }
  out.weighted = weighted;
  const long double bound = out.e_term + out.tail_term;
  out.ratio = bound > 0 ? out.weighted / bound : 0;
  return out;
}

std::vector<BoxInstance> enumerate_box_family(u64 M, u64 K, const std::vector<u64>& U, unsigned a,
                                              u64 r_max, u64 budget) {
  std::vector<u64> band;
  for (u64 p : sieve_primes(K)) {
    if (p > M && std::find(U.begin(), U.end(), p) == U.end()) band.push_back(p);
  }
  const auto subsets = subsets_of_size(band, a);
  if (static_cast<long double>(subsets.size()) * 2 * static_cast<long double>(r_max) >
      static_cast<long double>(budget)) {
    throw BudgetExceeded("box family exceeds the enumeration budget");
  }
  std::vector<BoxInstance> family;
  for (const auto& A : subsets) {
    for (u64 s = 1; s <= r_max; ++s) {
      bool coprime = true;
      for (u64 q : U) coprime = coprime && s % q != 0;
      for (u64 p : A) coprime = coprime && s % p != 0;
      if (!coprime) continue;
      family.push_back(make_box(M, K, U, A, -big_from_u64(s)));
      family.push_back(make_box(M, K, U, A, big_from_u64(s)));
    }
  }
  return family;
}

std::vector<HistogramRow> height_histogram(u64 p, const std::vector<BoxInstance>& family,
                                           const std::vector<std::int64_t>& t_grid) {
  const std::int64_t H = static_cast<std::int64_t>((p - 1) / 2);
  std::vector<std::uint64_t> by_height(static_cast<std::size_t>(H) + 1, 0);
  for (const BoxInstance& box : family) {
    if (!std::binary_search(box.A.begin(), box.A.end(), p)) continue;
    const HeightResult hr = qm_box_height(p, box);
    if (hr.h) ++by_height[static_cast<std::size_t>(std::abs(*hr.h))];
  }
  std::vector<std::uint64_t> cumulative(by_height.size(), 0);
  for (std::size_t i = 1; i < by_height.size(); ++i) cumulative[i] = cumulative[i - 1] + by_height[i];
  const std::uint64_t at_H = cumulative[static_cast<std::size_t>(H)];
  std::vector<HistogramRow> rows;
  for (std::int64_t t : t_grid) {
    if (t < 0) throw ValidationError("histogram grid values must be >= 0");
    HistogramRow row;
    row.t = t;
    row.count = cumulative[static_cast<std::size_t>(std::min(t, H))];
    if (t > 0 && at_H > 0) {
      row.ratio = static_cast<long double>(row.count) /
                  (static_cast<long double>(t) / static_cast<long double>(H) *
                   static_cast<long double>(at_H));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace kummerlab
