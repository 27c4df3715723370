#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kummerlab/errors.hpp"
#include "kummerlab/fourier.hpp"
#include "kummerlab/primes.hpp"
#include "oracle.hpp"

using namespace kummerlab;

namespace {

ExactRational q(const char* s) { return ExactRational::parse(s); }

FourierContext ctx10() { return FourierContext::make(make_params(10, q("2"), q("9/10"))); }

std::vector<std::uint64_t> members(const LocalSet& A) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < A.m; ++y) {
    if (A.contains(y)) out.push_back(y);
  }
  return out;
}

}  // namespace

TEST(Phi, Examples) {
  const FourierContext ctx = ctx10();
  EXPECT_EQ(phi(ctx, make_freq(ctx, {{11, 11}})), ExactRational(BigInt(2520), BigInt(11)));
  // negative entries use the least nonnegative representative
  EXPECT_EQ(make_freq(ctx, {{11, -1}}).support.at(11), 120u);
  EXPECT_EQ(phi(ctx, make_freq(ctx, {{11, -1}})), phi(ctx, make_freq(ctx, {{11, 120}})));
  const ExactRational sum = phi(ctx, make_freq(ctx, {{11, 3}})) + phi(ctx, make_freq(ctx, {{13, 5}}));
  EXPECT_EQ(phi(ctx, make_freq(ctx, {{11, 3}, {13, 5}})), sum);
  EXPECT_THROW(phi(ctx, FreqVector{}), ValidationError);
  EXPECT_THROW(make_freq(ctx, {{23, 1}}), ValidationError);
  EXPECT_TRUE(make_freq(ctx, {{11, 121}}).support.empty());
}

TEST(Denominator, Examples) {
  const FourierContext ctx = ctx10();
  EXPECT_EQ(exact_denominator(ctx, make_freq(ctx, {{11, 11}})), 11);
  EXPECT_EQ(exact_denominator(ctx, make_freq(ctx, {{11, 22}})), 11);
  EXPECT_EQ(exact_denominator(ctx, make_freq(ctx, {{11, 1}})), 121);
  EXPECT_THROW(exact_denominator(ctx, FreqVector{}), ValidationError);
}

TEST(Denominator, RandomVectorsObeyTheLaw) {
  std::mt19937_64 rng(40);
  for (std::uint64_t M : {10ull, 20ull, 40ull}) {
    const FourierContext ctx = FourierContext::make(make_params(M, q("2"), q("9/10")));
    const auto primes = sieve_primes(ctx.params.K);
    for (int trial = 0; trial < 300; ++trial) {
      std::map<std::uint64_t, std::int64_t> e;
      for (std::uint64_t p : primes) {
        if (rng() % 3 == 0) e[p] = static_cast<std::int64_t>(rng() % ctx.at(p).m);
      }
      const FreqVector a = make_freq(ctx, e);
      if (a.support.empty()) continue;
      const DenominatorCheck c = check_denominator(ctx, a);
      ASSERT_TRUE(c.equal);
      ASSERT_TRUE(c.norm_bound);
      // independent: reduce sum a_p L / p^beta with raw GMP rationals
      mpq_class raw = 0;
      const mpz_class L = oracle::lcm_upto(M);
      for (const auto& [p, ap] : a.support) {
        mpz_class pb = 1;
        for (unsigned i = 0; i < ctx.at(p).beta; ++i) pb *= static_cast<unsigned long>(p);
        raw += mpq_class(mpz_class(static_cast<unsigned long>(ap)) * L, pb);
      }
      raw.canonicalize();
      ASSERT_EQ(raw.get_den(), c.formula);
    }
  }
}

TEST(LocalFourier, ZeroFrequencyAndParseval) {
  const LocalSet A = LocalSet::build(11, 10, 20, q("9/10"));
  const LocalFourier F = local_fourier(A);
  EXPECT_EQ(F.size, 20u);
  EXPECT_EQ(F.normalized(0), 1.0L);
  EXPECT_NEAR(static_cast<double>(F.parseval_sum() / F.density()), 1.0, 1e-9);
  const auto mem = members(A);
  for (std::uint64_t xi = 0; xi < A.m; ++xi) {
    ASSERT_NEAR(static_cast<double>(std::abs(F.coeff[xi])), std::abs(oracle::dft_coeff(mem, A.m, xi)), 1e-12);
  }
  // w_p(h) |h| stays bounded over the height range
  long double worst = 0;
  for (std::int64_t h = -F.height_range(); h <= F.height_range(); ++h) {
    if (h != 0) worst = std::max(worst, F.prefix_weight(h) * static_cast<long double>(std::llabs(h)));
  }
  EXPECT_GT(worst, 0);
  EXPECT_LT(worst, 10);
  EXPECT_GT(F.l_star(), 0);
  EXPECT_GE(F.l1_mass(), 1);
}

TEST(LocalFourier, FlatIndicatorHasNoNonzeroModes) {
  // degenerate parameters: no lower cut and a strip that admits every nonzero digit
  LocalSet A = LocalSet::build(11, 10, 20, q("1/1000"));
  A.lower_cut = 0;
  ASSERT_EQ(local_set_size(A), A.m);
  const LocalFourier F = local_fourier(A);
  for (std::uint64_t xi = 1; xi < A.m; ++xi) EXPECT_LT(F.normalized(xi), 1e-15L);
}

TEST(LocalFourier, DirectAndFastAgree) {
  for (const auto& [p, M, K] : std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>{
           {11, 10, 20}, {2, 10, 40}, {3, 20, 40}, {101, 100, 200}, {149, 100, 200}}) {
    const LocalSet A = LocalSet::build(p, M, K, q("7/10"));
    const LocalFourier d = local_fourier(A, DftMethod::kDirect);
    const LocalFourier f = local_fourier(A, DftMethod::kFast);
    ASSERT_EQ(d.coeff.size(), f.coeff.size());
    for (std::size_t i = 0; i < d.coeff.size(); ++i) {
      ASSERT_LT(std::abs(d.coeff[i] - f.coeff[i]), 1e-9L) << p << " " << i;
    }
    ASSERT_NEAR(static_cast<double>(f.parseval_sum() / f.density()), 1.0, 1e-9);
  }
}

TEST(LocalFourier, BudgetIsEnforced) {
  EXPECT_THROW(local_fourier(LocalSet::build(101, 100, 200, q("7/10")), DftMethod::kAuto, 100),
               BudgetExceeded);
}

TEST(Criterion, EmptyShell) {
  const FourierContext ctx = ctx10();
  const CriterionSum s = criterion_partial_sum(ctx, 100, 0, 5, 1000);
  EXPECT_EQ(s.value, 0);
  EXPECT_EQ(s.modes, 0u);
  EXPECT_FALSE(s.truncated);
}

TEST(Criterion, SingleShellMatchesDirectEnumeration) {
  const FourierContext ctx = ctx10();
  const BigInt N = 1000;
  const CriterionSum s = criterion_partial_sum(ctx, N, 1, 5, 1000000, 1, true);
  double want = 0;
  std::uint64_t modes = 0;
  const mpz_class L = 2520;
  for (std::uint64_t p : {11ull, 13ull, 17ull, 19ull}) {
    const LocalSet A = LocalSet::build(p, 10, 20, q("9/10"));
    const auto mem = members(A);
    const double dens = static_cast<double>(mem.size()) / static_cast<double>(A.m);
    for (std::int64_t h = -5; h <= 5; ++h) {
      if (h == 0) continue;
      const std::uint64_t xi = static_cast<std::uint64_t>((h * static_cast<std::int64_t>(p)) %
                                                          static_cast<std::int64_t>(A.m) +
                                                          static_cast<std::int64_t>(A.m)) % A.m;
      const double w = std::abs(oracle::dft_coeff(mem, A.m, xi)) / dens;
      mpq_class v(mpz_class(static_cast<long>(h)) * L, static_cast<unsigned long>(p));
      v.canonicalize();
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
      mpq_class frac = v - fl;
      mpq_class dist = frac < mpq_class(1, 2) ? frac : mpq_class(1) - frac;
      const double nd = 1000.0 * dist.get_d();
      want += w * std::min(1.0, 1.0 / nd);
      ++modes;
    }
  }
  EXPECT_EQ(s.modes, modes);
  EXPECT_FALSE(s.truncated);
  EXPECT_NEAR(static_cast<double>(s.value), want, 1e-9 * want);
  EXPECT_EQ(s.rows.size(), modes);
}

TEST(Criterion, ScalesAsOneOverNOnceEveryMinIsOnItsSecondBranch) {
  const FourierContext ctx = ctx10();
  const BigInt big = BigInt(1) << 80;
  const CriterionSum a = criterion_partial_sum(ctx, big, 2, 3, 100000);
  const CriterionSum b = criterion_partial_sum(ctx, big * 8, 2, 3, 100000);
  EXPECT_NEAR(static_cast<double>(a.value / b.value), 8.0, 1e-9);
}

TEST(Criterion, TruncationIsDeterministic) {
  const FourierContext ctx = ctx10();
  const CriterionSum a = criterion_partial_sum(ctx, 50, 2, 4, 77, 1);
  const CriterionSum b = criterion_partial_sum(ctx, 50, 2, 4, 77, 8);
  EXPECT_TRUE(a.truncated);
  EXPECT_EQ(a.modes, 77u);
  EXPECT_EQ(a.value, b.value);
  const CriterionSum full1 = criterion_partial_sum(ctx, 50, 3, 6, 1u << 30, 1);
  const CriterionSum full8 = criterion_partial_sum(ctx, 50, 3, 6, 1u << 30, 8);
  EXPECT_EQ(full1.value, full8.value);
  EXPECT_EQ(full1.modes, full8.modes);
}
