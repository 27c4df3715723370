#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kummerlab/bigint.hpp"
#include "kummerlab/cyclotomic.hpp"
#include "kummerlab/rational.hpp"

namespace kummerlab {

/// Least primitive root mod p (1 for p = 2).
std::uint64_t primitive_root(std::uint64_t p);

/// Discrete logarithms base g mod p. Small p use a full table, larger p
/// baby-step giant-step.
class DiscreteLog {
 public:
  DiscreteLog(std::uint64_t p, std::uint64_t g);
  /// ind with g^ind = x mod p; throws ValidationError for x = 0 mod p.
  std::uint64_t operator()(std::uint64_t x) const;
  std::uint64_t prime() const noexcept { return p_; }

 private:
  std::uint64_t p_;
  std::uint64_t g_;
  std::vector<std::uint32_t> table_;
  std::uint64_t step_ = 0;
  std::uint64_t giant_ = 0;  // g^{-step}
  std::unordered_map<std::uint64_t, std::uint64_t> baby_;
};

/// chi(g^k) = e(j k / (p - 1)).
class Character {
 public:
  Character(std::uint64_t p, std::uint64_t j);
  Character(std::uint64_t p, std::uint64_t g, std::uint64_t j);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t g() const noexcept { return g_; }
  std::uint64_t j() const noexcept { return j_; }
  /// (p - 1) / gcd(j, p - 1)
  std::uint64_t order() const noexcept { return d_; }
  bool principal() const noexcept { return d_ == 1; }
  /// chi^ell, sharing this character's primitive root.
  Character power(std::uint64_t ell) const;
  Character conj() const;
  /// r with chi(x) = zeta_d^r, nullopt for x = 0 mod p.
  std::optional<std::uint64_t> class_of(std::uint64_t x) const;
  std::complex<long double> value(std::uint64_t x) const;

 private:
  std::uint64_t p_;
  std::uint64_t g_;
  std::uint64_t j_;
  std::uint64_t d_;
  std::shared_ptr<const DiscreteLog> log_;
};

/// sum_r n_r zeta_d^r evaluated with paired terms, so swapping n_r and n_{d-r}
/// conjugates the result bit for bit. Equal counts give exactly 0.
std::complex<long double> evaluate_classes(const std::vector<std::uint64_t>& n_r);

struct BandSum {
  std::complex<long double> sum;
  /// Number of primes in (M, CM] other than p.
  std::uint64_t band = 0;
  long double normalized = 0;
};

/// sum over primes q in (M, CM], q != p, of chi^ell(q); rejects principal chi^ell.
BandSum band_char_sum(const Character& chi, std::uint64_t ell, std::uint64_t M,
                      const ExactRational& C);

/// n_r = #{q in V : chi(q) = zeta_d^r}; rejects q = 0 mod p.
std::vector<std::uint64_t> class_counts(const std::vector<std::uint64_t>& V, const Character& chi);

struct MixingReport {
  std::uint64_t size = 0;  // |V|
  std::uint64_t d = 0;
  std::uint64_t k = 0;
  std::vector<std::uint64_t> counts;
  CyclotomicInteger coeff;
  /// |coeff|^2 when it is a rational integer.
  std::optional<BigInt> norm;
  long double coeff_abs = 0;
  BigInt binom_ref;
  long double ratio = 0;
  bool balanced = false;
};

/// [z^k] prod_r (1 + z zeta_d^r)^{n_r} in Z[zeta_d] against binom(sum n_r, k).
MixingReport mixing_from_classes(const std::vector<std::uint64_t>& counts, std::uint64_t k);

/// mixing_from_classes(class_counts(V, chi), k); needs 1 <= k <= |V| - 1.
MixingReport mixing_ratio(const std::vector<std::uint64_t>& V, const Character& chi,
                          std::uint64_t k);

struct BurgessRow {
  std::uint64_t x0 = 0;
  std::uint64_t y = 0;
  std::complex<long double> sum;
  long double normalized = 0;  // |sum| / y
};

/// sum_{x0 < n <= x0 + y} chi(n) over integers, for every grid pair.
std::vector<BurgessRow> burgess_profile(const Character& chi,
                                        const std::vector<std::uint64_t>& x0_grid,
                                        const std::vector<std::uint64_t>& y_grid);

}  // namespace kummerlab
