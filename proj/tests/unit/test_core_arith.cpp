#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kummerlab/arith.hpp"
#include "kummerlab/errors.hpp"
#include "kummerlab/factored.hpp"
#include "kummerlab/modular.hpp"
#include "kummerlab/primes.hpp"
#include "kummerlab/rational.hpp"
#include "oracle.hpp"

using namespace kummerlab;

TEST(Sieve, SmallLimits) {
  EXPECT_TRUE(sieve_primes(0).empty());
  EXPECT_TRUE(sieve_primes(1).empty());
  EXPECT_EQ(sieve_primes(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(sieve_primes(100).size(), 25u);
}

TEST(Sieve, MatchesTrialDivision) {
  EXPECT_EQ(sieve_primes(5000), oracle::primes_upto(5000));
}

TEST(Primality, MillerRabinAgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
  EXPECT_TRUE(is_prime(18446744073709551557ull));
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to 2, 3, 5, 7
}

TEST(AlphaBeta, Examples) {
  EXPECT_EQ(alpha_beta(2, 10, 20), (LocalExponents{2, 3, 5, 2, 4}));
  EXPECT_EQ(alpha_beta(11, 10, 20), (LocalExponents{11, 0, 2, 2, 121}));
  EXPECT_THROW(alpha_beta(23, 10, 20), ValidationError);
  EXPECT_THROW(alpha_beta(4, 10, 20), ValidationError);
}

TEST(AlphaBeta, AgreesWithPowerComparison) {
  for (std::uint64_t K = 2; K <= 600; ++K) {
    for (std::uint64_t M : {std::uint64_t{2}, K / 2 + 1, K}) {
      if (M < 2 || M > K) continue;
      for (std::uint64_t p : oracle::primes_upto(K)) {
        unsigned alpha = 0;
        std::uint64_t pw = p;
        while (pw <= M) {
          ++alpha;
          pw *= p;
        }
        unsigned beta = 0;
        pw = 1;
        while (pw <= K) {
          ++beta;
          pw *= p;
        }
        const LocalExponents e = alpha_beta(p, M, K);
        ASSERT_EQ(e.alpha, alpha);
        ASSERT_EQ(e.beta, beta);
        ASSERT_EQ(e.B, beta - alpha);
        ASSERT_EQ(e.m, oracle::pow_mod(p, beta - alpha, ~0ull));
        if (p > M) ASSERT_EQ(e.alpha, 0u);
      }
    }
  }
}

TEST(FloorLog, ExactPowerBoundaries) {
  EXPECT_EQ(floor_log(2, 8), 3u);
  EXPECT_EQ(floor_log(2, 7), 2u);
  EXPECT_EQ(floor_log(3, 243), 5u);
  EXPECT_EQ(floor_log(2, ~0ull), 63u);
  EXPECT_EQ(floor_log(10, 1), 0u);
}

TEST(Lcm, MatchesGcdOracle) {
  EXPECT_TRUE(lcm_factored(1).is_one());
  EXPECT_EQ(lcm_factored(10).factors(), (FactoredNat::Map{{2, 3}, {3, 2}, {5, 1}, {7, 1}}));
  EXPECT_EQ(lcm_factored(10).to_integer(), 2520);
  for (std::uint64_t M = 1; M <= 300; ++M) ASSERT_EQ(lcm_factored(M).to_integer(), oracle::lcm_upto(M));
}

TEST(Qm, TimesLcmIsFactorial) {
  EXPECT_TRUE(qm_factored(1).is_one());
  EXPECT_EQ(qm_factored(10).factors(), (FactoredNat::Map{{2, 5}, {3, 2}, {5, 1}}));
  EXPECT_EQ(qm_factored(10).to_integer(), 1440);
  for (std::uint64_t M = 1; M <= 120; ++M) {
    ASSERT_EQ(qm_factored(M).to_integer() * lcm_factored(M).to_integer(), oracle::factorial(M));
  }
}

TEST(Wilson, Examples) {
  EXPECT_EQ(wilson_lm_residue(10, 11), 1u);
  EXPECT_EQ(wilson_lm_residue(10, 13), 11u);
  EXPECT_THROW(wilson_lm_residue(10, 7), ValidationError);
  EXPECT_THROW(wilson_lm_residue(10, 10), ValidationError);
}

TEST(Wilson, RandomAgainstDirect) {
  std::mt19937_64 rng(684);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t M = 1 + rng() % 300;
    const std::uint64_t p = M + 1 + rng() % 100;
    if (!oracle::is_prime(p)) continue;
    const mpz_class L = oracle::lcm_upto(M);
    ASSERT_EQ(wilson_lm_residue(M, p), mpz_class(L % static_cast<unsigned long>(p)).get_ui());
  }
}

TEST(Psi, LogOfLcm) {
  EXPECT_EQ(chebyshev_psi(1), 0.0L);
  EXPECT_NEAR(static_cast<double>(chebyshev_psi(10)), std::log(2520.0), 1e-9);
  for (std::uint64_t M = 2; M <= 200; ++M) {
    const long double want = log_big(oracle::lcm_upto(M));
    ASSERT_NEAR(static_cast<double>(chebyshev_psi(M) / want), 1.0, 1e-9) << M;
  }
}

TEST(Legendre, Valuation) {
  EXPECT_EQ(legendre_valuation(10, 2), 8u);
  EXPECT_EQ(legendre_valuation(100, 5), 24u);
}

TEST(Crt, Examples) {
  std::vector<CrtInput> in{{1, {2, 1}}, {2, {3, 1}}};
  const CrtResult r = crt_combine(in);
  EXPECT_EQ(r.residue, 5);
  EXPECT_EQ(r.modulus, 6);
  std::vector<CrtInput> single{{0, {7, 3}}};
  EXPECT_EQ(crt_combine(single).modulus, 343);
  EXPECT_EQ(crt_combine(single).residue, 0);
  std::vector<CrtInput> repeated{{1, {2, 1}}, {1, {2, 2}}};
  EXPECT_THROW(crt_combine(repeated), ValidationError);
}

TEST(Crt, RandomSystemsReduceBack) {
  std::mt19937_64 rng(7);
  const std::vector<std::uint64_t> pool{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 1000003};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> chosen = pool;
    std::shuffle(chosen.begin(), chosen.end(), rng);
    chosen.resize(5);
    std::vector<CrtInput> in;
    for (std::uint64_t p : chosen) {
      const unsigned a = 1 + rng() % 3;
      const PrimePower pp{p, a};
      const mpz_class q = pp.value();
      mpz_class r = static_cast<unsigned long>(rng() % 1000000007);
      r %= q;
      in.push_back({r, pp});
    }
    const CrtResult out = crt_combine(in);
    for (const CrtInput& c : in) {
      ASSERT_EQ(mpz_class(out.residue % c.modulus.value()), c.residue);
    }
    ASSERT_GE(out.residue, 0);
    ASSERT_LT(out.residue, out.modulus);
  }
}

TEST(Modular, InverseAndSignedRepresentative) {
  EXPECT_EQ(inv_mod(3, 7), 5u);
  EXPECT_THROW(inv_mod(6, 9), ValidationError);
  EXPECT_EQ(signed_rep(6, 11), -5);
  EXPECT_EQ(signed_rep(5, 11), 5);
  EXPECT_EQ(signed_rep(5, 10), 5);
  EXPECT_EQ(reduce_signed(-1, 8), 7u);
  for (std::uint64_t m = 2; m < 60; ++m) {
    for (std::uint64_t a = 1; a < m; ++a) {
      if (gcd_u64(a, m) == 1) ASSERT_EQ(inv_mod(a, m), oracle::inverse(a, m));
    }
  }
}

TEST(FactoredNat, CanonicalForm) {
  const FactoredNat x = FactoredNat::parse("2^3*3^2*5*7");
  EXPECT_EQ(x.to_integer(), 2520);
  EXPECT_EQ(x.to_string(), "2^3*3^2*5*7");
  EXPECT_EQ(FactoredNat().to_string(), "1");
  EXPECT_EQ(FactoredNat::parse("1"), FactoredNat());
  EXPECT_THROW(FactoredNat(FactoredNat::Map{{4, 1}}), ValidationError);
  EXPECT_THROW(FactoredNat(FactoredNat::Map{{3, 0}}), ValidationError);
  EXPECT_EQ(x * factor_nat(10), factor_nat(25200));
  EXPECT_EQ(x.residue(1000), 520u);
  EXPECT_NEAR(static_cast<double>(x.log()), std::log(2520.0), 1e-12);
  for (std::uint64_t n = 1; n < 3000; ++n) {
    const FactoredNat f = factor_nat(n);
    ASSERT_EQ(f.to_integer(), static_cast<unsigned long>(n));
    for (const auto& [p, e] : f.factors()) ASSERT_EQ(f.exponent(p), e);
  }
}

TEST(Rational, ReducedAndExact) {
  const ExactRational q(BigInt(6), BigInt(-4));
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(ExactRational::parse("0.9"), ExactRational(BigInt(9), BigInt(10)));
  EXPECT_EQ(ExactRational::parse("9/10"), ExactRational(BigInt(9), BigInt(10)));
  EXPECT_EQ(ExactRational::parse("-1.25e1"), ExactRational(BigInt(-25), BigInt(2)));
  EXPECT_THROW(ExactRational::parse("1/0"), ValidationError);
  EXPECT_THROW(ExactRational::parse("abc"), ValidationError);
  EXPECT_NE(ExactRational::from_double(0.9), ExactRational::parse("9/10"));
  EXPECT_EQ(ExactRational::from_double(0.5), ExactRational(BigInt(1), BigInt(2)));
  EXPECT_EQ(ExactRational::parse("7/3").floor(), 2);
  EXPECT_EQ(ExactRational::parse("-7/3").floor(), -3);
  EXPECT_EQ(ExactRational::parse("-7/3").ceil(), -2);
  EXPECT_EQ(ExactRational::parse("7/3").distance_to_integer(), ExactRational(BigInt(1), BigInt(3)));
  EXPECT_EQ(ExactRational::parse("8/3").distance_to_integer(), ExactRational(BigInt(1), BigInt(3)));
  EXPECT_EQ(ExactRational::parse("5/2").to_string(), "5/2");
  EXPECT_EQ(ExactRational(4).to_string(), "4");
  EXPECT_NEAR(static_cast<double>(ExactRational::parse("1/3").to_long_double()), 1.0 / 3, 1e-15);
}
