#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kummerlab/arith.hpp"
#include "kummerlab/bigint.hpp"
#include "kummerlab/factored.hpp"
#include "kummerlab/local_set.hpp"
#include "kummerlab/rational.hpp"

namespace kummerlab {

/// Per-prime data shared by the frequency-side computations.
struct FourierContext {
  ConstructionParams params;
  FactoredNat lcm;
  std::map<std::uint64_t, LocalExponents> exponents;

  static FourierContext make(const ConstructionParams& params);
  const LocalExponents& at(std::uint64_t p) const;
  /// Primes in (M, K].
  std::vector<std::uint64_t> top_band() const;
};

/// Sparse frequency vector a = (a_p), 0 < a_p < m_p.
struct FreqVector {
  std::map<std::uint64_t, std::uint64_t> support;
};

/// Normalizes entries to [0, m_p) and drops zeros; rejects primes above K.
FreqVector make_freq(const FourierContext& ctx,
                     const std::map<std::uint64_t, std::int64_t>& entries);

/// sum_p a_p L_M / p^{beta_p}; rejects the zero vector.
ExactRational phi(const FourierContext& ctx, const FreqVector& a);

/// prod_p p^{B_p - v_p(a_p)}.
BigInt denominator_formula(const FourierContext& ctx, const FreqVector& a);

struct DenominatorCheck {
  BigInt formula;
  BigInt reduced;
  ExactRational value;
  /// ||Phi(a)||, distance to the nearest integer.
  ExactRational norm;
  bool equal = false;
  bool norm_bound = false;  // ||Phi|| >= 1/q
};

DenominatorCheck check_denominator(const FourierContext& ctx, const FreqVector& a);

/// q(a); throws InternalError if the formula and the reduced denominator differ.
BigInt exact_denominator(const FourierContext& ctx, const FreqVector& a);

enum class DftMethod { kAuto, kDirect, kFast };

/// m above which kAuto switches to the fast transform.
inline constexpr std::uint64_t kDirectDftLimit = 20'000;

/// DFT of the indicator of A_p: coeff[xi] = (1/m) sum_{y in A} e(-xi y / m).
struct LocalFourier {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  unsigned B = 0;
  std::uint64_t size = 0;
  std::vector<std::complex<long double>> coeff;

  long double density() const {
    return static_cast<long double>(size) / static_cast<long double>(m);
  }
  /// |coeff[xi]| / (|A|/m).
  long double normalized(std::uint64_t xi) const;
  /// w_p(h) = normalized(h p mod m); needs B >= 2.
  long double prefix_weight(std::int64_t h) const;
  /// (p - 1) / 2
  std::int64_t height_range() const { return static_cast<std::int64_t>((p - 1) / 2); }
  /// sum_{0 < |h| <= H_p} w_p(h)
  long double l_star() const;
  /// sum over all xi of normalized(xi).
  long double l1_mass() const;
  /// sum |coeff|^2, which should equal |A|/m.
  long double parseval_sum() const;
};

LocalFourier local_fourier(const LocalSet& A, DftMethod method = DftMethod::kAuto,
                           std::uint64_t budget = kDefaultEnumerationBudget);

struct CriterionRow {
  std::vector<std::uint64_t> primes;
  std::vector<std::int64_t> heights;
  ExactRational phi;
  ExactRational norm;
  long double weight = 0;
  long double term = 0;
};

struct CriterionSum {
  long double value = 0;
  std::uint64_t modes = 0;
  bool truncated = false;
  std::vector<CriterionRow> rows;
};

/// Partial sum of W(a) min(1, 1/(N ||Phi(a)||)) over top-band prefix modes
/// a_p = h_p p with |supp a| = s and 0 < |h_p| <= min(h_cap, H_p). Modes are
/// taken in lexicographic order (support, then heights) and the first
/// count_cap of them are summed.
CriterionSum criterion_partial_sum(const FourierContext& ctx, const BigInt& N, unsigned s,
                                   std::int64_t h_cap, std::uint64_t count_cap,
                                   unsigned workers = 1, bool collect_rows = false);

}  // namespace kummerlab
