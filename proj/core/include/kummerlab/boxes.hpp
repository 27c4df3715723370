#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kummerlab/bigint.hpp"
#include "kummerlab/fourier.hpp"

namespace kummerlab {

/// Core primes U, petal primes A in (M, K], and a numerator r coprime to P_U P_A.
struct BoxInstance {
  std::uint64_t M = 0;
  std::uint64_t K = 0;
  std::vector<std::uint64_t> U;
  std::vector<std::uint64_t> A;
  BigInt r;
  BigInt P_U = 1;
  BigInt P_A = 1;
};

/// Sorts U and A and validates primality, disjointness, the band of A,
/// r != 0 and gcd(r, P_U P_A) = 1.
BoxInstance make_box(std::uint64_t M, std::uint64_t K, std::vector<std::uint64_t> U,
                     std::vector<std::uint64_t> A, const BigInt& r);

/// (-1)^{p-M} ((p-M-1)!)^{-1} mod p, for p > M.
std::uint64_t c_p(std::uint64_t p, std::uint64_t M);

struct HeightResult {
  /// Signed representative of r Q_M (c_p P_U P_{A\p})^{-1} mod p, |h| <= (p-1)/2;
  /// nullopt when it is 0.
  std::optional<std::int64_t> h;
  /// r Q_M = h c_p P_U P_A / p (mod p) holds for the returned h.
  bool forms_agree = false;
};

HeightResult qm_box_height(std::uint64_t p, const BoxInstance& box);

/// r P_A^{-1} mod P_U (0 when U is empty).
BigInt rho_u(const BoxInstance& box);

struct CensusResult {
  /// Boxes (A, r) met by the enumeration.
  std::uint64_t boxes = 0;
  /// sum over boxes of prod_{p in A} w_p(h_p).
  long double weighted = 0;
  /// e_a({L_q^*})
  long double e_term = 0;
  /// (2R/P_U) e_a({L_q^*/q})
  long double tail_term = 0;
  /// weighted / (e_term + tail_term), 0 when both vanish.
  long double ratio = 0;
};

inline constexpr std::uint64_t kDefaultCensusBudget = 100'000'000;

/// Enumerates A subset of W with |A| = a and R < |r| <= 2R, gcd(r, P_U P_A) = 1,
/// rho_U(A, r) = xi, weighting each box by its prefix Fourier weights.
CensusResult t_r_census(const FourierContext& ctx, const std::vector<std::uint64_t>& U,
                        const std::vector<std::uint64_t>& W, unsigned a, std::uint64_t R,
                        const BigInt& xi, std::uint64_t budget = kDefaultCensusBudget);

/// All boxes with the given U, |A| = a, A inside the top band minus U, and
/// 0 < |r| <= r_max with gcd(r, P_U P_A) = 1.
std::vector<BoxInstance> enumerate_box_family(std::uint64_t M, std::uint64_t K,
                                              const std::vector<std::uint64_t>& U, unsigned a,
                                              std::uint64_t r_max,
                                              std::uint64_t budget = kDefaultCensusBudget);

struct HistogramRow {
  std::int64_t t = 0;
  std::uint64_t count = 0;
  /// N_p(t) / ((t/H_p) N_p(H_p)); nullopt when the denominator is 0.
  std::optional<long double> ratio;
};

/// N_p(t) = #{boxes in family with p in A and 0 < |h_p| <= t} for each t.
std::vector<HistogramRow> height_histogram(std::uint64_t p, const std::vector<BoxInstance>& family,
                                           const std::vector<std::int64_t>& t_grid);

}  // namespace kummerlab
