#include "kummerlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "kummerlab/errors.hpp"
#include "kummerlab/rational.hpp"

namespace kummerlab {

namespace {

std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<BigInt> q(num.size() - dn, BigInt(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const BigInt c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

long double to_ld(const BigInt& v) { return ExactRational(v, 1).to_long_double(); }

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned d) {
  if (d == 0) throw ValidationError("cyclotomic polynomial needs d >= 1");
  static std::mutex mu;
  static std::map<unsigned, std::vector<BigInt>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  // x^d - 1 divided by Phi_e for every proper divisor e of d
  std::vector<BigInt> poly(d + 1, BigInt(0));
  poly[0] = -1;
  poly[d] = 1;
  for (unsigned e = 1; e < d; ++e) {
    if (d % e == 0) poly = poly_divide_exact(poly, cyclotomic_polynomial(e));
  }
  std::lock_guard lock(mu);
  cache.emplace(d, poly);
  return poly;
}

CyclotomicInteger::CyclotomicInteger(unsigned d) : d_(d) {
  if (d == 0) throw ValidationError("cyclotomic order must be >= 1");
  c_.assign(cyclotomic_polynomial(d).size() - 1, BigInt(0));
}

CyclotomicInteger CyclotomicInteger::reduce(unsigned d, std::vector<BigInt> poly) {
  const std::vector<BigInt> phi = cyclotomic_polynomial(d);
  const std::size_t n = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > n;) {
    const BigInt c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) poly[i - n + j] -= c * phi[j];
  }
  CyclotomicInteger out(d);
  for (std::size_t i = 0; i < n && i < poly.size(); ++i) out.c_[i] = poly[i];
  return out;
}

CyclotomicInteger CyclotomicInteger::from_group_ring(unsigned d, const std::vector<BigInt>& g) {
  if (g.size() != d) throw ValidationError("group ring element must have d coefficients");
  return reduce(d, g);
}

CyclotomicInteger CyclotomicInteger::zeta_power(unsigned d, unsigned r) {
  std::vector<BigInt> g(d, BigInt(0));
  g[r % d] = 1;
  return from_group_ring(d, g);
}

bool CyclotomicInteger::is_zero() const {
  for (const BigInt& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<BigInt> CyclotomicInteger::as_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return std::nullopt;
  }
  return c_.empty() ? BigInt(0) : c_[0];
}

CyclotomicInteger CyclotomicInteger::conj() const {
  std::vector<BigInt> g(d_, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) g[(d_ - i) % d_] += c_[i];
  return from_group_ring(d_, g);
}

CyclotomicInteger CyclotomicInteger::abs_squared() const { return *this * conj(); }

std::complex<long double> CyclotomicInteger::to_complex() const {
  long double re = 0;
  long double im = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const long double ang = 2 * std::numbers::pi_v<long double> * static_cast<long double>(i) /
                            static_cast<long double>(d_);
    const long double v = to_ld(c_[i]);
    re += v * std::cos(ang);
    im += v * std::sin(ang);
  }
  return {re, im};
}

long double CyclotomicInteger::magnitude() const {
  const CyclotomicInteger n = abs_squared();
  if (auto exact = n.as_integer()) return std::sqrt(to_ld(*exact));
  return std::sqrt(std::fmax(0.0L, n.to_complex().real()));
}

CyclotomicInteger operator+(const CyclotomicInteger& x, const CyclotomicInteger& y) {
  if (x.d_ != y.d_) throw ValidationError("cyclotomic orders differ");
  CyclotomicInteger out(x.d_);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = x.c_[i] + y.c_[i];
  return out;
}

CyclotomicInteger operator*(const CyclotomicInteger& x, const CyclotomicInteger& y) {
  if (x.d_ != y.d_) throw ValidationError("cyclotomic orders differ");
  std::vector<BigInt> prod(x.c_.size() + y.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) prod[i + j] += x.c_[i] * y.c_[j];
  }
  return CyclotomicInteger::reduce(x.d_, std::move(prod));
}

}  // namespace kummerlab
