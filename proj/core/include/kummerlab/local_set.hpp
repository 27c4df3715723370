#pragma once

#include <cstdint>
#include <vector>

#include "kummerlab/arith.hpp"
#include "kummerlab/bigint.hpp"
#include "kummerlab/rational.hpp"

namespace kummerlab {

/// Value of C * sum_{j=0}^{floor C} (1/(j+theta) - 1/(j+1)) and whether it
/// is < 2 (decided exactly).
struct ThetaCheck {
  long double value = 0;
  bool ok = false;
};

ThetaCheck theta_condition(const ExactRational& C, const ExactRational& theta);
ThetaCheck theta_condition(double C, double theta);

/// Parameters of one multiplier construction; K = floor(C * M).
struct ConstructionParams {
  std::uint64_t M = 0;
  ExactRational C;
  ExactRational theta;
  std::uint64_t K = 0;
  BigInt t_max = 1;
};

/// Validates M >= 2, C > 1, 0 < theta < 1, the theta condition, t_max >= 1.
ConstructionParams make_params(std::uint64_t M, const ExactRational& C,
                               const ExactRational& theta, const BigInt& t_max = 1);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// The admissible residue set A_p inside Z/mZ, m = p^B.
///
/// y is admitted iff y = 0, or y >= ceil((K+1)/p^alpha) and, for every
/// 1 <= b < B, s = y mod p^b satisfies s = 0 or s >= theta * p^b (exact
/// rational comparison).
struct LocalSet {
  std::uint64_t p = 0;
  std::uint64_t M = 0;
  std::uint64_t K = 0;
  unsigned alpha = 0;
  unsigned beta = 0;
  unsigned B = 0;
  std::uint64_t m = 0;
  ExactRational theta;
  std::uint64_t lower_cut = 0;
  /// (lcm(1..M) / p^alpha) mod m, coprime to p.
  std::uint64_t u_p_residue = 0;

  static LocalSet build(std::uint64_t p, std::uint64_t M, std::uint64_t K,
                        const ExactRational& theta);
  static LocalSet build(std::uint64_t p, const ConstructionParams& params);

  /// Throws ValidationError when y >= m.
  bool contains(std::uint64_t y) const;
};

/// |A_p| by enumeration; BudgetExceeded when m > budget.
std::uint64_t local_set_size(const LocalSet& A,
                             std::uint64_t budget = kDefaultEnumerationBudget);

/// table[y] = 1 iff y is in A_p; BudgetExceeded when m > budget.
std::vector<std::uint8_t> membership_table(const LocalSet& A,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace kummerlab
