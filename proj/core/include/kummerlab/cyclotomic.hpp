#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "kummerlab/bigint.hpp"

namespace kummerlab {

/// Coefficients of the d-th cyclotomic polynomial, constant term first.
std::vector<BigInt> cyclotomic_polynomial(unsigned d);

/// Element of Z[zeta_d] stored as a polynomial of degree < phi(d) in zeta_d = e(1/d).
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(unsigned d = 1);

  /// sum_r g[r] zeta^r from the group ring Z[x]/(x^d - 1), reduced mod Phi_d.
  static CyclotomicInteger from_group_ring(unsigned d, const std::vector<BigInt>& g);
  static CyclotomicInteger zeta_power(unsigned d, unsigned r);

  unsigned order() const noexcept { return d_; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool is_zero() const;
  /// The value when the element is a rational integer.
  std::optional<BigInt> as_integer() const;
  CyclotomicInteger conj() const;
  /// z * conj(z), exact; an integer whenever phi(d) <= 2.
  CyclotomicInteger abs_squared() const;
  std::complex<long double> to_complex() const;
  /// sqrt of the evaluated abs_squared().
  long double magnitude() const;

  friend CyclotomicInteger operator+(const CyclotomicInteger& x, const CyclotomicInteger& y);
  friend CyclotomicInteger operator*(const CyclotomicInteger& x, const CyclotomicInteger& y);
  bool operator==(const CyclotomicInteger&) const = default;

 private:
  static CyclotomicInteger reduce(unsigned d, std::vector<BigInt> poly);

  unsigned d_;
  std::vector<BigInt> c_;
};

}  // namespace kummerlab
