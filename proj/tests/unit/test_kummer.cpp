#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kummerlab/errors.hpp"
#include "kummerlab/kummer.hpp"
#include "kummerlab/primes.hpp"
#include "kummerlab/residue_system.hpp"
#include "oracle.hpp"

using namespace kummerlab;

namespace {

std::map<std::uint64_t, unsigned> levels_for(std::uint64_t n, std::uint64_t k) {
  // enough levels for the early stop: every p <= k up to p^a > n
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p : sieve_primes(std::max<std::uint64_t>(k, 2))) out[p] = floor_log(p, n) + 1;
  return out;
}

}  // namespace

TEST(Carry, Examples) {
  const CarryProfile a = carry_count(BigInt(10), 4, 2);
  EXPECT_EQ(a.count(), 1u);
  EXPECT_EQ(a.carry_levels, std::vector<unsigned>{3});
  EXPECT_EQ(carry_count(BigInt(35), 3, 3).count(), 0u);
  EXPECT_EQ(carry_count(BigInt(35), 0, 7).count(), 0u);
  EXPECT_THROW(carry_count(BigInt(3), 4, 2), ValidationError);
}

TEST(Carry, CountIsValuationExhaustive) {
  const auto rows = oracle::pascal(300);
  for (std::uint64_t n = 0; n <= 300; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      const auto f = oracle::factor(rows[n][k], n);
      for (std::uint64_t p : {2, 3, 5, 7, 13, 101, 293}) {
        const auto it = f.find(p);
        const unsigned want = it == f.end() ? 0 : it->second;
        ASSERT_EQ(carry_count(BigInt(static_cast<unsigned long>(n)), k, p).count(), want)
            << n << " " << k << " " << p;
      }
    }
  }
}

TEST(Carry, EarlyStopIsSound) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::uint64_t n = 1 + rng() % 1000000;
    const std::uint64_t k = rng() % std::min<std::uint64_t>(n + 1, 2000);
    const std::uint64_t p = sieve_primes(50)[rng() % 15];
    const CarryProfile prof = carry_count(BigInt(static_cast<unsigned long>(n)), k, p);
    // full digit oracle over every level p^a <= n
    std::vector<unsigned> all;
    unsigned a = 1;
    for (unsigned __int128 q = p; q <= n; q *= p, ++a) {
      if (k % static_cast<std::uint64_t>(q) > n % static_cast<std::uint64_t>(q)) all.push_back(a);
    }
    ASSERT_EQ(prof.carry_levels, all);
    for (unsigned lvl : all) ASSERT_LE(lvl, prof.stop_level);
  }
}

TEST(Split, Examples) {
  const SmoothSplit s = uv_split(BigInt(10), 4);
  EXPECT_EQ(s.u.to_integer(), 6);
  EXPECT_EQ(s.v.to_integer(), 35);
  EXPECT_EQ(uv_split(BigInt(9), 9).u, FactoredNat());
  EXPECT_EQ(uv_split(BigInt(9), 9).v, FactoredNat());
  const SmoothSplit t = uv_split(BigInt(35), 3);
  EXPECT_TRUE(t.u.is_one());
  EXPECT_EQ(t.v.factors(), (FactoredNat::Map{{5, 1}, {7, 1}, {11, 1}, {17, 1}}));
  EXPECT_THROW(uv_split(BigInt(3), 5), ValidationError);
}

TEST(Split, ProductIsBinomial) {
  const auto rows = oracle::pascal(150);
  for (std::uint64_t n = 0; n <= 150; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      const SmoothSplit s = uv_split(BigInt(static_cast<unsigned long>(n)), k);
      ASSERT_EQ(s.u.to_integer() * s.v.to_integer(), rows[n][k]);
      for (const auto& [p, e] : s.u.factors()) ASSERT_LE(p, k);
      for (const auto& [p, e] : s.v.factors()) ASSERT_GT(p, k);
      ASSERT_EQ(smooth_part(BigInt(static_cast<unsigned long>(n)), k), s.u);
    }
  }
}

TEST(LogU, ExplicitAndResidueBackendsAgree) {
  EXPECT_NEAR(static_cast<double>(log_u(BigInt(10), 4)), std::log(6.0), 1e-12);
  EXPECT_EQ(log_u(BigInt(10), 0), 0.0L);
  const ResidueSystem rs = ResidueSystem::from_integer(BigInt(10), {{2, 4}, {3, 3}, {5, 2}, {7, 1}});
  EXPECT_EQ(log_u(rs, 4), log_u(BigInt(10), 4));

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = 1 + rng() % 1000000;
    const std::uint64_t k = rng() % std::min<std::uint64_t>(n + 1, 1001);
    const BigInt nb(static_cast<unsigned long>(n));
    const ResidueSystem r = ResidueSystem::from_integer(nb, levels_for(n, k));
    ASSERT_NEAR(static_cast<double>(log_u(r, k)), static_cast<double>(log_u(nb, k)), 1e-9);
  }
}

TEST(LogU, MissingLevelsNamesThePrime) {
  // 35 = 0b100011; with only 2^1 stored the stop for k = 3 cannot be certified
  ResidueSystem rs;
  rs.set({2, 1}, BigInt(1));
  rs.set({3, 3}, BigInt(8));
  try {
    log_u(rs, 3);
    FAIL() << "expected MissingLevels";
  } catch (const MissingLevels& e) {
    EXPECT_EQ(e.prime(), 2u);
  }
}

TEST(FExact, SmallValues) {
  EXPECT_FALSE(f_exact(BigInt(3)).has_value());
  const auto f35 = f_exact(BigInt(35));
  ASSERT_TRUE(f35.has_value());
  EXPECT_GT(*f35, 3u);
  EXPECT_EQ(static_cast<long long>(*f35), oracle::f_direct(35));
  const auto f1000 = f_exact(BigInt(1000));
  ASSERT_TRUE(f1000.has_value());
  EXPECT_EQ(static_cast<long long>(*f1000), oracle::f_direct(1000));
}

TEST(FExact, AgreesWithDirectFactorization) {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    const auto f = f_exact(BigInt(static_cast<unsigned long>(n)));
    ASSERT_EQ(f ? static_cast<long long>(*f) : -1, oracle::f_direct(n)) << n;
  }
}

TEST(FExact, WorkerCountDoesNotChangeResult) {
  for (std::uint64_t n : {35ull, 1000ull, 4999ull, 123456ull}) {
    const BigInt nb(static_cast<unsigned long>(n));
    EXPECT_EQ(f_exact(nb, std::nullopt, 1), f_exact(nb, std::nullopt, 8));
  }
}

TEST(FExact, KMaxBoundsTheSearch) {
  const auto f = f_exact(BigInt(1000));
  ASSERT_TRUE(f);
  EXPECT_FALSE(f_exact(BigInt(1000), *f - 1).has_value());
  EXPECT_EQ(f_exact(BigInt(1000), *f), f);
}

TEST(FLower, Examples) {
  const FLowerCertificate c = verify_f_lower(BigInt(35), 3);
  EXPECT_TRUE(c.passed);
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.log_u_by_k.size(), 4u);
  const auto f = f_exact(BigInt(35));
  const FLowerCertificate d = verify_f_lower(BigInt(35), 34);
  EXPECT_EQ(!d.passed, f.has_value() && *f <= 34);
  if (!d.passed) {
    ASSERT_TRUE(d.first_violation);
    EXPECT_EQ(*d.first_violation, *f);
  }
  EXPECT_TRUE(verify_f_lower(BigInt(1), 0).passed);
  EXPECT_TRUE(verify_f_lower(BigInt(987654321), 0).passed);
}

TEST(FLower, ResidueInputNeedsLogValue) {
  ResidueSystem rs;
  const ResidueSystem full = ResidueSystem::from_integer(BigInt(35), {{2, 6}, {3, 4}});
  for (const auto& [pp, r] : full.entries()) rs.set(pp, r);
  EXPECT_THROW(verify_f_lower(rs, 3), MissingLogValue);
  rs.set_log_value(std::log(35.0L));
  const FLowerCertificate c = verify_f_lower(rs, 3);
  EXPECT_TRUE(c.passed);
  EXPECT_FALSE(c.exact);
}

TEST(ResidueSystem, CoherenceIsEnforced) {
  ResidueSystem rs;
  rs.set({3, 2}, BigInt(7));
  EXPECT_THROW(rs.set({3, 1}, BigInt(2)), ValidationError);
  rs.set({3, 1}, BigInt(1));
  EXPECT_THROW(rs.set({3, 3}, BigInt(8)), ValidationError);
  rs.set({3, 3}, BigInt(16));
  EXPECT_THROW(rs.set({5, 1}, BigInt(5)), ValidationError);
  EXPECT_TRUE(rs.coherent());
  EXPECT_EQ(rs.residue(3, 2), BigInt(7));
  EXPECT_EQ(rs.max_level(3), 3u);
  EXPECT_EQ(rs.max_level(5), 0u);
  EXPECT_FALSE(rs.residue(3, 4).has_value());
  EXPECT_THROW(rs.set_log_value(-1), ValidationError);
}
