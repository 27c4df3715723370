#include "kummerlab/construction.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "kummerlab/arith.hpp"
#include "kummerlab/csv.hpp"
#include "kummerlab/errors.hpp"
#include "kummerlab/modular.hpp"
#include "kummerlab/parallel.hpp"
#include "kummerlab/primes.hpp"

namespace kummerlab {

namespace {

using u64 = std::uint64_t;

DensityRow density_row(const LocalSet& A, u64 budget) {
  DensityRow row;
  row.p = A.p;
  row.alpha = A.alpha;
  row.beta = A.beta;
  row.B = A.B;
  row.m = A.m;
  row.size = local_set_size(A, budget);
  row.ratio = static_cast<long double>(row.size) / static_cast<long double>(row.m);
  row.log_inv_ratio = std::log(static_cast<long double>(row.m)) -
                      std::log(static_cast<long double>(row.size));
  return row;
}

}  // namespace

FactoredNat apssv_seed(u64 K) {
  if (K < 2) throw ValidationError("apssv_seed requires K >= 2");
  FactoredNat::Map m;
  for (u64 p : sieve_primes(K)) m.emplace(p, floor_log(p, K) + 1);
  return FactoredNat(std::move(m));
}

DensityReport density(const ConstructionParams& params, u64 budget) {
  DensityReport report;
  for (u64 p : sieve_primes(params.K)) {
    report.rows.push_back(density_row(LocalSet::build(p, params), budget));
    report.log_delta_inv += report.rows.back().log_inv_ratio;
  }
  const long double M = static_cast<long double>(params.M);
  report.leading_order = (params.C.to_long_double() - 1) *
                         std::log(1 / (1 - params.theta.to_long_double())) * M / std::log(M);
  return report;
}

SearchResult multiplier_search(const ConstructionParams& params, unsigned workers, u64 budget) {
  const auto t_max = to_u64(params.t_max);
  if (!t_max || *t_max < 1 || *t_max > (1ull << 62)) {
    throw ValidationError("t_max must lie in [1, 2^62]");
  }
  struct Check {
    u64 m;
    u64 u;
    std::vector<std::uint8_t> table;
  };
  std::vector<Check> checks;
  SearchResult result;
  for (u64 p : sieve_primes(params.K)) {
    const LocalSet A = LocalSet::build(p, params);
    result.scan_order.push_back(density_row(A, budget));
    checks.push_back({A.m, A.u_p_residue % A.m, membership_table(A, budget)});
  }
  // most restrictive condition first
  std::vector<std::size_t> order(checks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.scan_order[a].ratio < result.scan_order[b].ratio;
  });
  {
    std::vector<Check> c2;
    std::vector<DensityRow> r2;
    for (std::size_t i : order) {
      c2.push_back(std::move(checks[i]));
      r2.push_back(result.scan_order[i]);
    }
    checks = std::move(c2);
    result.scan_order = std::move(r2);
  }
  if (checks.empty()) {
    result.t = 1;
    return result;
  }

  constexpr u64 kBlock = 1u << 16;
  const u64 n_blocks = (*t_max + kBlock - 1) / kBlock;
  std::atomic<u64> best{std::numeric_limits<u64>::max()};
  parallel_blocks(n_blocks, workers, [&](std::size_t b) {
    const u64 lo = 1 + static_cast<u64>(b) * kBlock;
    const u64 hi = std::min(*t_max, lo + kBlock - 1);
    if (lo > best.load(std::memory_order_relaxed)) return;
    // incremental residue for the leading check, direct products for the rest
    const Check& first = checks[0];
    u64 y0 = mul_mod(lo % first.m, first.u, first.m);
    for (u64 t = lo; t <= hi; ++t) {
      if (first.table[y0]) {
        bool ok = true;
        for (std::size_t i = 1; i < checks.size(); ++i) {
          const Check& c = checks[i];
          if (!c.table[mul_mod(t % c.m, c.u, c.m)]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          u64 cur = best.load();
          while (t < cur && !best.compare_exchange_weak(cur, t)) {
          }
          return;
        }
      }
      y0 += first.u;
      if (y0 >= first.m) y0 -= first.m;
    }
  });
  if (best.load() != std::numeric_limits<u64>::max()) result.t = best.load();
  return result;
}

BigInt materialize_n(const BigInt& t, u64 M) {
  if (t < 1) throw ValidationError("t must be >= 1");
  return t * lcm_factored(M).to_integer() - 1;
}

ResidueSystem assemble_n(const BigInt& t, const ConstructionParams& params, LevelPolicy policy) {
  if (t < 1) throw ValidationError("assemble_n requires t >= 1");
  const FactoredNat L = lcm_factored(params.M);
  ResidueSystem rs;
  for (u64 p : sieve_primes(params.K)) {
    const unsigned top = floor_log(p, params.K) + 1 + policy.extra_levels;
    for (unsigned a = 1; a <= top; ++a) {
      const auto q = checked_pow(p, a);
      if (!q) throw ValidationError("level p^a overflows 64 bits");
      const u64 r = (mul_mod(mod_u64(t, *q), L.residue(*q), *q) + *q - 1) % *q;
      rs.set({p, a}, big_from_u64(r));
    }
  }
  // log(t L_M - 1) = log t + psi(M) + log(1 - 1/(t L_M))
  const long double log_tl = log_big(t) + chebyshev_psi(params.M);
  long double correction = 0;
  std::string note;
  if (log_tl < 100000 * std::log(2.0L)) {
    const BigInt tl = t * L.to_integer();
    correction = std::log1p(-std::exp(-log_big(tl)));
    note = "log correction exact";
  } else {
    note = "log correction |log(1-1/(t L_M))| < 2^-99999 omitted";
  }
  rs.set_log_value(log_tl + correction);
  rs.set_label("n = t*L_M - 1; M=" + std::to_string(params.M) + "; t=" + to_decimal(t) + "; " + note);
  return rs;
}

Certificate verify_construction(const ResidueSystem& rs, const ConstructionParams& params,
                                unsigned workers) {
  Certificate cert;
  cert.M = params.M;
  cert.C = params.C;
  cert.theta = params.theta;
  cert.K = params.K;
  const u64 K = params.K;
  const BigInt big_K = big_from_u64(K);
  const BigInt th_num = params.theta.numerator();
  const BigInt th_den = params.theta.denominator();
  const std::vector<u64> primes = sieve_primes(K);

  auto residue_at = [&](u64 p, unsigned a) {
    auto r = rs.residue(p, a);
    if (!r) throw MissingLevels(p);
    return *r;
  };

  struct Middle {
    u64 q;
    unsigned a;
  };
  std::vector<std::vector<Middle>> middles(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const u64 p = primes[i];
    const LocalExponents e = alpha_beta(p, params.M, K);
    for (unsigned a = 1; a <= e.alpha; ++a) {
      const BigInt q = PrimePower{p, a}.value();
      const BigInt r = residue_at(p, a);
      cert.records.push_back({cond::kMinusOne, p, a, std::nullopt, r == q - 1,
                              {{"residue", to_decimal(r)}, {"expected", to_decimal(q - 1)}}});
    }
    {
      const BigInt r = residue_at(p, e.beta);
      cert.records.push_back({cond::kTopLevel, p, e.beta, std::nullopt, r >= big_K,
                              {{"residue", to_decimal(r)}, {"K", std::to_string(K)}}});
    }
    for (unsigned a = e.alpha + 1; a < e.beta; ++a) {
      const u64 q = *checked_pow(p, a);
      const BigInt r = residue_at(p, a);
      // r + 1 >= theta q, or r = q - 1
      const bool ok = r == big_from_u64(q - 1) || (r + 1) * th_den >= th_num * big_from_u64(q);
      cert.records.push_back({cond::kMiddleLevel, p, a, std::nullopt, ok,
                              {{"residue", to_decimal(r)},
                               {"threshold", (params.theta * ExactRational(big_from_u64(q), 1) -
                                              ExactRational(1)).to_string()}}});
      middles[i].push_back({q, a});
    }
  }

  // carry localization: every middle-level carry for k <= K must satisfy
  // k/(j+1) < q < k/(j+theta) + 1 for some 0 <= j <= floor(C)
  const u64 j_top = *to_u64(params.C.floor());
  std::vector<std::vector<CheckRecord>> per_k(K + 1);
  parallel_blocks(K + 1, workers, [&](std::size_t kk) {
    const u64 k = kk;
    for (std::size_t i = 0; i < primes.size() && primes[i] <= k; ++i) {
      const u64 p = primes[i];
      const CarryProfile prof = carry_count(rs, k, p);
      for (unsigned a : prof.carry_levels) {
        auto it = std::find_if(middles[i].begin(), middles[i].end(),
                               [a](const Middle& m) { return m.a == a; });
        if (it == middles[i].end()) {
          per_k[k].push_back({cond::kCarryOutside, p, a, k, false, {}});
          continue;
        }
        const u64 q = it->q;
        std::optional<u64> hit;
        for (u64 j = 0; j <= j_top && !hit; ++j) {
          const bool lower = static_cast<unsigned __int128>(q) * (j + 1) > k;
          // q < k/(j+theta) + 1  <=>  (q - 1)(j*den + num) < k*den
          const bool upper = big_from_u64(q - 1) * (big_from_u64(j) * th_den + th_num) <
                             big_from_u64(k) * th_den;
          if (lower && upper) hit = j;
        }
        per_k[k].push_back({cond::kCarryInterval, p, a, k, hit.has_value(),
                            {{"q", std::to_string(q)},
                             {"j", hit ? std::to_string(*hit) : std::string("none")}}});
      }
    }
  });
  for (auto& recs : per_k) {
    for (auto& r : recs) cert.records.push_back(std::move(r));
  }

  const FLowerCertificate fl = verify_f_lower(rs, K, workers);
  for (u64 k = 0; k <= K; ++k) {
    const long double margin = 2 * fl.log_n - fl.log_u_by_k[k];
    cert.records.push_back({cond::kSmoothBound, 0, 0, k,
                            !(fl.first_violation && *fl.first_violation == k) &&
                                margin > 0,
                            {{"log_u", fmt_real(fl.log_u_by_k[k])}, {"margin", fmt_real(margin)}}});
  }
  cert.log_n = fl.log_n;
  cert.min_margin = fl.margin;
  cert.argmin_k = fl.argmax_k;
  cert.verdict = std::all_of(cert.records.begin(), cert.records.end(),
                             [](const CheckRecord& r) { return r.pass; });
  return cert;
}

}  // namespace kummerlab
