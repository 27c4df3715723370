#include "kummerlab/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "kummerlab/errors.hpp"
#include "kummerlab/modular.hpp"
#include "kummerlab/parallel.hpp"
#include "kummerlab/primes.hpp"

namespace kummerlab {

namespace {

using u64 = std::uint64_t;
using cld = std::complex<long double>;

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

unsigned valuation(u64 x, u64 p) {
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

struct Neumaier {
  long double sum = 0;
  long double comp = 0;
  void add(long double x) {
    const long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  long double value() const { return sum + comp; }
};

std::vector<cld> direct_dft(const std::vector<std::uint8_t>& table, u64 m) {
  std::vector<cld> tw(m);
  const long double step = -2 * std::numbers::pi_v<long double> / static_cast<long double>(m);
  for (u64 k = 0; k < m; ++k) {
    const long double ang = step * static_cast<long double>(k);
    tw[k] = {std::cos(ang), std::sin(ang)};
  }
  std::vector<u64> members;
  for (u64 y = 0; y < m; ++y) {
    if (table[y]) members.push_back(y);
  }
  std::vector<cld> out(m);
  for (u64 xi = 0; xi < m; ++xi) {
    long double re = 0;
    long double im = 0;
    for (u64 y : members) {
      const cld& w = tw[mul_mod(xi, y, m)];
      re += w.real();
      im += w.imag();
    }
    out[xi] = {re / static_cast<long double>(m), im / static_cast<long double>(m)};
  }
  return out;
}

std::vector<cld> fast_dft(const std::vector<std::uint8_t>& table, u64 m) {
  const int n = static_cast<int>(m);
  fftwl_complex* in = fftwl_alloc_complex(m);
  fftwl_complex* out = fftwl_alloc_complex(m);
  fftwl_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftwl_plan_dft_1d(n, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  for (u64 y = 0; y < m; ++y) {
    in[y][0] = table[y] ? 1.0L : 0.0L;
    in[y][1] = 0;
  }
  fftwl_execute(plan);
  std::vector<cld> res(m);
  for (u64 k = 0; k < m; ++k) {
    res[k] = {out[k][0] / static_cast<long double>(m), out[k][1] / static_cast<long double>(m)};
  }
  {
    std::lock_guard lock(planner_mutex());
    fftwl_destroy_plan(plan);
  }
  fftwl_free(in);
  fftwl_free(out);
  return res;
}

}  // namespace

FourierContext FourierContext::make(const ConstructionParams& params) {
  FourierContext ctx;
  ctx.params = params;
  ctx.lcm = lcm_factored(params.M);
  for (u64 p : sieve_primes(params.K)) ctx.exponents.emplace(p, alpha_beta(p, params.M, params.K));
  return ctx;
}

const LocalExponents& FourierContext::at(u64 p) const {
  auto it = exponents.find(p);
  if (it == exponents.end()) {
    throw ValidationError("prime " + std::to_string(p) + " is not a prime <= K");
  }
  return it->second;
}

std::vector<u64> FourierContext::top_band() const {
  std::vector<u64> out;
  for (const auto& [p, e] : exponents) {
    if (p > params.M) out.push_back(p);
  }
  return out;
}

FreqVector make_freq(const FourierContext& ctx, const std::map<u64, std::int64_t>& entries) {
  FreqVector a;
  for (const auto& [p, v] : entries) {
    const u64 m = ctx.at(p).m;
    const u64 r = reduce_signed(v, m);
    if (r != 0) a.support.emplace(p, r);
  }
  return a;
}

ExactRational phi(const FourierContext& ctx, const FreqVector& a) {
  if (a.support.empty()) throw ValidationError("phi of the zero frequency vector");
  const BigInt L = ctx.lcm.to_integer();
  ExactRational sum(0);
  for (const auto& [p, ap] : a.support) {
    const LocalExponents& e = ctx.at(p);
    if (ap == 0 || ap >= e.m) throw ValidationError("frequency entry out of range");
    sum = sum + ExactRational(big_from_u64(ap) * L, PrimePower{p, e.beta}.value());
  }
  return sum;
}

BigInt denominator_formula(const FourierContext& ctx, const FreqVector& a) {
  if (a.support.empty()) throw ValidationError("denominator of the zero frequency vector");
  BigInt q = 1;
  for (const auto& [p, ap] : a.support) {
    const LocalExponents& e = ctx.at(p);
    const unsigned r = e.B - valuation(ap, p);
    for (unsigned i = 0; i < r; ++i) q *= big_from_u64(p);
  }
  return q;
}

DenominatorCheck check_denominator(const FourierContext& ctx, const FreqVector& a) {
  DenominatorCheck c;
  c.value = phi(ctx, a);
  c.formula = denominator_formula(ctx, a);
  c.reduced = c.value.denominator();
  c.norm = c.value.distance_to_integer();
  c.equal = c.formula == c.reduced;
  c.norm_bound = c.norm >= ExactRational(BigInt(1), c.formula);
  return c;
}

BigInt exact_denominator(const FourierContext& ctx, const FreqVector& a) {
  const DenominatorCheck c = check_denominator(ctx, a);
  if (!c.equal) {
    throw InternalError("denominator formula " + to_decimal(c.formula) +
                        " differs from reduced denominator " + to_decimal(c.reduced));
  }
  return c.formula;
}

long double LocalFourier::normalized(u64 xi) const {
  if (xi >= m) throw ValidationError("frequency out of range");
  return std::abs(coeff[xi]) / density();
}

long double LocalFourier::prefix_weight(std::int64_t h) const {
  if (B < 2) throw ValidationError("prefix weights need B_p >= 2");
  const u64 xi = mul_mod(reduce_signed(h, m), p, m);
  return normalized(xi);
}

long double LocalFourier::l_star() const {
  Neumaier s;
  for (std::int64_t h = 1; h <= height_range(); ++h) {
    s.add(prefix_weight(h));
    s.add(prefix_weight(-h));
  }
  return s.value();
}

long double LocalFourier::l1_mass() const {
  Neumaier s;
  for (u64 xi = 0; xi < m; ++xi) s.add(normalized(xi));
  return s.value();
}

long double LocalFourier::parseval_sum() const {
  Neumaier s;
  for (const cld& c : coeff) s.add(std::norm(c));
  return s.value();
}

LocalFourier local_fourier(const LocalSet& A, DftMethod method, u64 budget) {
  const std::vector<std::uint8_t> table = membership_table(A, budget);
  LocalFourier F;
  F.p = A.p;
  F.m = A.m;
  F.B = A.B;
  F.size = static_cast<u64>(std::count(table.begin(), table.end(), 1));
  if (method == DftMethod::kAuto) {
    method = A.m <= kDirectDftLimit ? DftMethod::kDirect : DftMethod::kFast;
  }
  F.coeff = method == DftMethod::kDirect ? direct_dft(table, A.m) : fast_dft(table, A.m);
  // frequency 0 is the density itself
  F.coeff[0] = {F.density(), 0};
  return F;
}

CriterionSum criterion_partial_sum(const FourierContext& ctx, const BigInt& N, unsigned s,
                                   std::int64_t h_cap, u64 count_cap, unsigned workers,
                                   bool collect_rows) {
  if (N < 1) throw ValidationError("N must be >= 1");
  if (h_cap < 1) throw ValidationError("h_cap must be >= 1");
  CriterionSum out;
  const std::vector<u64> band = ctx.top_band();
  if (s == 0 || s > band.size() || count_cap == 0) {
    out.truncated = s != 0 && s <= band.size();
    return out;
  }
  std::map<u64, LocalFourier> local;
  std::map<u64, u64> u_mod;
  for (u64 p : band) {
    local.emplace(p, local_fourier(LocalSet::build(p, ctx.params)));
    u_mod.emplace(p, ctx.lcm.residue(p));
  }

  // supports in lexicographic order
  std::vector<std::vector<u64>> supports;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  for (;;) {
    std::vector<u64> sup;
    for (std::size_t i : idx) sup.push_back(band[i]);
    supports.push_back(std::move(sup));
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == band.size() - s + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }

  // mode offsets make truncation independent of the block schedule
  std::vector<u64> take(supports.size());
  u64 offset = 0;
  for (std::size_t b = 0; b < supports.size(); ++b) {
    unsigned __int128 count = 1;
    for (u64 p : supports[b]) {
      const std::int64_t H = std::min<std::int64_t>(h_cap, local.at(p).height_range());
      count *= static_cast<unsigned __int128>(2 * H);
    }
    const u64 room = offset >= count_cap ? 0 : count_cap - offset;
    take[b] = count > room ? room : static_cast<u64>(count);
    if (count > room) out.truncated = true;
    offset += take[b];
  }
  out.modes = offset;

  std::vector<Neumaier> partial(supports.size());
  std::vector<std::vector<CriterionRow>> rows(supports.size());
  parallel_blocks(supports.size(), workers, [&](std::size_t b) {
    const std::vector<u64>& sup = supports[b];
    std::vector<std::int64_t> H(sup.size());
    for (std::size_t i = 0; i < sup.size(); ++i) {
      H[i] = std::min<std::int64_t>(h_cap, local.at(sup[i]).height_range());
    }
    std::vector<std::int64_t> h(sup.size());
    for (std::size_t i = 0; i < sup.size(); ++i) h[i] = -H[i];
    BigInt P = 1;
    for (u64 p : sup) P *= big_from_u64(p);
    for (u64 n = 0; n < take[b]; ++n) {
      // Phi = sum h_p u_p / p with u_p = L_M mod p
      BigInt num = 0;
      long double weight = 1;
      for (std::size_t i = 0; i < sup.size(); ++i) {
        const BigInt cof = P / big_from_u64(sup[i]);
        num += big_from_i64(h[i]) * big_from_u64(u_mod.at(sup[i])) * cof;
        weight *= local.at(sup[i]).prefix_weight(h[i]);
      }
      const ExactRational value(num, P);
      const ExactRational norm = value.distance_to_integer();
      const ExactRational scaled = ExactRational(N, 1) * norm;
      const long double factor =
          scaled <= ExactRational(1) ? 1.0L : (ExactRational(1) / scaled).to_long_double();
      const long double term = weight * factor;
      partial[b].add(term);
      if (collect_rows) rows[b].push_back({sup, h, value, norm, weight, term});
      // odometer over heights, skipping 0
      for (std::size_t i = sup.size(); i-- > 0;) {
        ++h[i];
        if (h[i] == 0) ++h[i];
        if (h[i] <= H[i]) break;
        h[i] = -H[i];
      }
    }
  });
  Neumaier total;
  for (const auto& p : partial) {
    total.add(p.sum);
    total.add(p.comp);
  }
  out.value = total.value();
  if (collect_rows) {
    for (auto& r : rows) {
      for (auto& row : r) out.rows.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace kummerlab
