#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kummerlab/arith.hpp"
#include "kummerlab/boxes.hpp"
#include "kummerlab/buchstab.hpp"
#include "kummerlab/characters.hpp"
#include "kummerlab/construction.hpp"
#include "kummerlab/errors.hpp"
#include "kummerlab/fourier.hpp"
#include "kummerlab/io.hpp"
#include "kummerlab/kummer.hpp"
#include "kummerlab/parallel.hpp"
#include "kummerlab/primes.hpp"
#include "kummerlab/symmetric.hpp"
#include "oracle.hpp"

using namespace kummerlab;
using u64 = std::uint64_t;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string hexfloat(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%La", x);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome kummer_split() {
  const auto rows = oracle::pascal(300);
  u64 cases = 0;
  for (u64 n = 0; n <= 300; ++n) {
    for (u64 k = 0; k <= n; ++k) {
      const SmoothSplit s = uv_split(big_from_u64(n), k);
      const BigInt u = s.u.to_integer();
      const BigInt v = s.v.to_integer();
      if (u * v != rows[n][k]) return {false, "u*v != binom at n=" + std::to_string(n) + " k=" + std::to_string(k)};
      if (u != oracle::smooth_part(n, k)) return {false, "smooth part differs at n=" + std::to_string(n)};
      for (const auto& [p, e] : s.u.factors()) {
        if (p > k) return {false, "u has a prime above k"};
      }
      for (const auto& [p, e] : s.v.factors()) {
        if (p <= k) return {false, "v has a prime at most k"};
      }
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " pairs"};
}

Outcome f_agreement() {
  u64 with_value = 0;
  for (u64 n = 1; n <= 2000; ++n) {
    const auto f = f_exact(big_from_u64(n));
    const long long ref = oracle::f_direct(n);
    const long long got = f ? static_cast<long long>(*f) : -1;
    if (got != ref) {
      return {false, "n=" + std::to_string(n) + " got " + std::to_string(got) + " oracle " + std::to_string(ref)};
    }
    with_value += f.has_value();
  }
  return {true, "n <= 2000, " + std::to_string(with_value) + " with f defined"};
}

Outcome apssv(unsigned workers) {
  for (u64 K = 2; K <= 25; ++K) {
    const FactoredNat seed = apssv_seed(K);
    const FLowerCertificate c = verify_f_lower(seed.to_integer() - 1, K, workers);
    if (!c.passed || !c.exact) return {false, "K=" + std::to_string(K)};
  }
  return {true, "K = 2..25 exact"};
}

struct GridRun {
  Outcome outcome;
  std::string transcript;
};

GridRun construction_grid(unsigned workers) {
  GridRun run;
  std::ostringstream log;
  const std::vector<std::pair<u64, u64>> Cs = {{3, 2}, {2, 1}};
  const std::vector<std::pair<u64, u64>> thetas = {{7, 10}, {9, 10}};
  u64 points = 0;
  u64 found = 0;
  for (u64 M = 10; M <= 40; ++M) {
    for (const auto& [cn, cd] : Cs) {
      for (const auto& [tn, td] : thetas) {
        const ExactRational C(cn, cd);
        const ExactRational theta(tn, td);
        log << M << ' ' << C.to_string() << ' ' << theta.to_string() << ' ';
        if (!theta_condition(C, theta).ok) {
          log << "theta-condition-fails\n";
          continue;
        }
        ++points;
        const ConstructionParams params = make_params(M, C, theta, BigInt(100000000));
        const SearchResult s = multiplier_search(params, workers);
        if (!s.t) {
          log << "none\n";
          continue;
        }
        ++found;
        const BigInt t = big_from_u64(*s.t);
        const Certificate cert = verify_construction(assemble_n(t, params), params, workers);
        const auto f = f_exact(materialize_n(t, M), params.K, workers);
        log << *s.t << ' ' << construction_certificate_json(cert, t) << ' ' << (f ? std::to_string(*f) : "none")
            << '\n';
        if (!cert.verdict || f) {
          run.outcome = {false, "M=" + std::to_string(M) + " C=" + C.to_string() + " theta=" + theta.to_string() +
                                    (cert.verdict ? ": f <= K" : ": certificate fails")};
          run.transcript = log.str();
          return run;
        }
      }
    }
  }
  run.transcript = log.str();
  run.outcome = {found > 0, std::to_string(found) + " of " + std::to_string(points) + " admissible points found t"};
  return run;
}

Outcome wilson() {
  u64 cases = 0;
  for (u64 M = 1; M <= 300; ++M) {
    const mpz_class L = oracle::lcm_upto(M);
    for (u64 p = M + 1; p <= M + 100; ++p) {
      if (!oracle::is_prime(p)) continue;
      const mpz_class direct = L % p;
      if (wilson_lm_residue(M, p) != direct.get_ui()) {
        return {false, "M=" + std::to_string(M) + " p=" + std::to_string(p)};
      }
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " pairs"};
}

struct DenomRun {
  Outcome outcome;
  std::string transcript;
};

DenomRun denominators(unsigned workers) {
  DenomRun run;
  bool ok = true;
  std::string failure;
  for (u64 M : {10, 20, 40}) {
    const FourierContext ctx = FourierContext::make(make_params(M, ExactRational(2), ExactRational(9, 10)));
    const auto primes = sieve_primes(ctx.params.K);
    std::mt19937_64 rng(1000 + M);
    std::vector<FreqVector> vectors;
    while (vectors.size() < 1000) {
      std::map<u64, std::int64_t> e;
      for (u64 p : primes) {
        if (rng() % 2) e[p] = static_cast<std::int64_t>(rng() % ctx.at(p).m);
      }
      FreqVector v = make_freq(ctx, e);
      if (!v.support.empty()) vectors.push_back(std::move(v));
    }
    std::vector<std::string> lines(vectors.size());
    std::vector<char> good(vectors.size(), 0);
    parallel_blocks(vectors.size(), workers, [&](std::size_t i) {
      const DenominatorCheck c = check_denominator(ctx, vectors[i]);
      good[i] = c.equal && c.norm_bound;
      lines[i] = c.value.to_string() + ' ' + to_decimal(c.formula) + ' ' + to_decimal(c.reduced) + '\n';
    });
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      run.transcript += lines[i];
      if (!good[i] && ok) {
        ok = false;
        failure = "M=" + std::to_string(M) + " vector " + std::to_string(i);
      }
    }
  }
  run.outcome = {ok, ok ? "3000 vectors at M = 10, 20, 40" : failure};
  return run;
}

Outcome buchstab() {
  const BuchstabScan a = buchstab_scan(100000, 10, ExactRational(2), 8);
  const BuchstabScan b = buchstab_scan(100000, 20, ExactRational(3, 2), 8);
  const bool ok = a.failures.empty() && b.failures.empty();
  return {ok, std::to_string(a.checked) + " + " + std::to_string(b.checked) + " squarefree n, " +
                  std::to_string(a.failures.size() + b.failures.size()) + " failures"};
}

Outcome mixing() {
  u64 checked = 0;
  for (u64 d : {2, 3, 4}) {
    const std::vector<u64> counts(d, 12);
    for (u64 k = 1; k < 12 * d; ++k) {
      const MixingReport r = mixing_from_classes(counts, k);
      if (k % d != 0) {
        if (!r.coeff.is_zero()) return {false, "nonzero at d=" + std::to_string(d) + " k=" + std::to_string(k)};
      } else {
        const auto v = r.coeff.as_integer();
        if (!v || abs(*v) != oracle::binomial(12, k / d)) {
          return {false, "wrong magnitude at d=" + std::to_string(d) + " k=" + std::to_string(k)};
        }
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " coefficients"};
}

struct PivotRun {
  Outcome outcome;
  std::string transcript;
};

PivotRun pivots(unsigned workers) {
  std::mt19937_64 rng(30);
  std::vector<std::vector<long double>> lists(100, std::vector<long double>(30));
  for (auto& l : lists) {
    for (auto& w : l) w = static_cast<long double>(rng() >> 11) / static_cast<long double>(1ull << 53);
  }
  PivotRun run;
  long double worst = 0;
  for (std::size_t k = 1; k <= 30; ++k) {
    for (const PivotCheck& c : pivot_identity_batch(lists, k, workers)) {
      worst = std::max(worst, c.rel_error);
      run.transcript += hexfloat(c.lhs) + ' ' + hexfloat(c.rhs) + '\n';
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Lg", worst);
  run.outcome = {worst <= 1e-12L, std::string("worst relative error ") + buf};
  return run;
}

Outcome heights() {
  const u64 M = 10;
  const u64 K = 20;
  std::vector<BoxInstance> family;
  u64 r_max = 1;
  for (u64 q : sieve_primes(K)) {
    if (q > M) r_max *= q;
  }
  for (unsigned a = 1; a <= 4; ++a) {
    const auto part = enumerate_box_family(M, K, {}, a, r_max);
    family.insert(family.end(), part.begin(), part.end());
  }
  for (u64 p : {11, 13}) {
    const std::int64_t H = static_cast<std::int64_t>((p - 1) / 2);
    std::vector<std::int64_t> grid;
    for (std::int64_t i = 1; i <= 20; ++i) grid.push_back((i * H + 19) / 20);
    const auto rows = height_histogram(p, family, grid);
    const long double at_H = static_cast<long double>(height_histogram(p, family, {H})[0].count);
    for (const HistogramRow& r : rows) {
      const long double bound = 3.0L * static_cast<long double>(r.t) / static_cast<long double>(H) * at_H + 3.0L;
      if (static_cast<long double>(r.count) > bound) {
        return {false, "p=" + std::to_string(p) + " t=" + std::to_string(r.t)};
      }
    }
  }
  return {true, std::to_string(family.size()) + " boxes"};
}

Outcome char_saving() {
  std::string detail;
  bool ok = true;
  for (u64 p : {101, 211, 401}) {
    const Character base(p, 1);
    long double worst = 0;
    long double half = 0;
    for (u64 j = 1; j + 1 < p; ++j) {
      const Character chi(p, base.g(), j);
      worst = std::max(worst, band_char_sum(chi, 1, p - 1, ExactRational(2)).normalized);
      half = std::max(half, band_char_sum(chi, 1, p / 2, ExactRational(2)).normalized);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "p=%llu max %.4Lf [M=p/2 report %.4Lf]", static_cast<unsigned long long>(p),
                  worst, half);
    detail += (detail.empty() ? "" : ", ") + std::string(buf);
    ok = ok && worst < 0.6L;
  }
  return {ok, detail};
}

Outcome determinism() {
  const GridRun g1 = construction_grid(1);
  const GridRun g8 = construction_grid(8);
  const DenomRun d1 = denominators(1);
  const DenomRun d8 = denominators(8);
  const PivotRun p1 = pivots(1);
  const PivotRun p8 = pivots(8);
  std::string bad;
  if (g1.transcript != g8.transcript) bad += " construction";
  if (d1.transcript != d8.transcript) bad += " denominators";
  if (p1.transcript != p8.transcript) bad += " pivot";
  return {bad.empty(), bad.empty() ? "workers 1 and 8 identical" : "differs:" + bad};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"kummer split u*v = binom(n,k), n <= 300", kummer_split},
      {"f_exact agrees with the oracle, n <= 2000", f_agreement},
      {"seed construction f(M_K - 1) > K, K = 2..25", [] { return apssv(8); }},
      {"multiplier construction grid end to end", [] { return construction_grid(8).outcome; }},
      {"Wilson residue of L_M modulo p", wilson},
      {"exact denominator of Phi(a)", [] { return denominators(8).outcome; }},
      {"finite Buchstab identity, n <= 10^5", buchstab},
      {"product mixing on balanced classes", mixing},
      {"pivot identity on 100 lists of length 30", [] { return pivots(8).outcome; }},
      {"height histogram cap N_p(t) <= 3(t/H)N_p(H) + 3", heights},
      {"band character sums below 0.6", char_saving},
      {"determinism across worker counts", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu: %s  %s (%s; %.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
