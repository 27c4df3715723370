#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummerlab/bigint.hpp"
#include "kummerlab/factored.hpp"
#include "kummerlab/kummer.hpp"
#include "kummerlab/local_set.hpp"
#include "kummerlab/residue_system.hpp"

namespace kummerlab {

/// prod_{p <= K} p^{floor(log_p K) + 1}.
FactoredNat apssv_seed(std::uint64_t K);

struct DensityRow {
  std::uint64_t p = 0;
  unsigned alpha = 0;
  unsigned beta = 0;
  unsigned B = 0;
  std::uint64_t m = 0;
  std::uint64_t size = 0;
  /// |A_p| / m_p
  long double ratio = 0;
  /// log(m_p / |A_p|)
  long double log_inv_ratio = 0;
};

struct DensityReport {
  std::vector<DensityRow> rows;
  long double log_delta_inv = 0;
  /// (C - 1) log(1/(1 - theta)) M / log M
  long double leading_order = 0;
};

DensityReport density(const ConstructionParams& params,
                      std::uint64_t budget = kDefaultEnumerationBudget);

struct SearchResult {
  std::optional<std::uint64_t> t;
  /// Per-prime acceptance ratios in scan order (most restrictive first).
  std::vector<DensityRow> scan_order;
};

/// Least 1 <= t <= t_max with t * u_p mod m_p in A_p for every p <= K.
/// [1, t_max] is split into fixed blocks scanned by `workers` threads;
/// the result does not depend on the worker count.
SearchResult multiplier_search(const ConstructionParams& params, unsigned workers = 1,
                               std::uint64_t budget = kDefaultEnumerationBudget);

struct LevelPolicy {
  /// Levels stored above beta_p for every p <= K.
  unsigned extra_levels = 0;
};

/// Residues of n = t * lcm(1..M) - 1 at p^a for p <= K, a <= beta_p
/// (+ extra levels), with log_value = log t + psi(M) + log(1 - 1/(t L_M)).
ResidueSystem assemble_n(const BigInt& t, const ConstructionParams& params,
                         LevelPolicy policy = {});

/// t * lcm(1..M) - 1 as an explicit integer.
BigInt materialize_n(const BigInt& t, std::uint64_t M);

/// Condition names used in certificate records.
namespace cond {
inline constexpr const char* kMinusOne = "minus_one";          // n = -1 mod p^a, a <= alpha
inline constexpr const char* kTopLevel = "top_level";          // n mod p^beta >= K
inline constexpr const char* kMiddleLevel = "middle_level";    // n mod q >= theta q - 1 or = -1
inline constexpr const char* kCarryInterval = "carry_interval";  // carry q inside a j-interval
inline constexpr const char* kCarryOutside = "carry_outside_middle";
inline constexpr const char* kSmoothBound = "smooth_bound";    // u_k <= n^2
}  // namespace cond

struct CheckRecord {
  std::string condition;
  std::uint64_t p = 0;
  unsigned level = 0;
  std::optional<std::uint64_t> k;
  bool pass = false;
  std::map<std::string, std::string> witness;

  bool operator==(const CheckRecord&) const = default;
};

struct Certificate {
  std::uint64_t M = 0;
  ExactRational C;
  ExactRational theta;
  std::uint64_t K = 0;
  std::vector<CheckRecord> records;
  bool verdict = false;
  long double log_n = 0;
  /// min over k <= K of log(n^2 / u_k), and where it is attained.
  long double min_margin = 0;
  std::uint64_t argmin_k = 0;

  bool operator==(const Certificate&) const = default;
};

/// Re-derives every step of the construction's proof on the residue system:
/// -1 residues below alpha, the top-level bound, middle-level strips, the
/// interval localization of carries (slack 1), and u_k <= n^2 for k <= K.
Certificate verify_construction(const ResidueSystem& rs, const ConstructionParams& params,
                                unsigned workers = 1);

}  // namespace kummerlab
