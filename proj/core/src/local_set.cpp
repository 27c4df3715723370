#include "kummerlab/local_set.hpp"

#include "kummerlab/errors.hpp"
#include "kummerlab/modular.hpp"
#include "kummerlab/primes.hpp"

namespace kummerlab {

ThetaCheck theta_condition(const ExactRational& C, const ExactRational& theta) {
  if (!(C > ExactRational(1))) throw ValidationError("theta_condition requires C > 1");
  if (!(theta > ExactRational(0)) || !(theta < ExactRational(1))) {
    throw ValidationError("theta_condition requires 0 < theta < 1");
  }
  const BigInt top = C.floor();
  ExactRational sum(0);
  for (BigInt j = 0; j <= top; ++j) {
    const ExactRational jj(j, 1);
    sum = sum + ExactRational(1) / (jj + theta) - ExactRational(1) / (jj + ExactRational(1));
  }
  const ExactRational value = C * sum;
  return {value.to_long_double(), value < ExactRational(2)};
}

ThetaCheck theta_condition(double C, double theta) {
  return theta_condition(ExactRational::from_double(C), ExactRational::from_double(theta));
}

ConstructionParams make_params(std::uint64_t M, const ExactRational& C,
                               const ExactRational& theta, const BigInt& t_max) {
  if (M < 2) throw ValidationError("construction requires M >= 2");
  const ThetaCheck tc = theta_condition(C, theta);
  if (!tc.ok) {
    throw ValidationError("theta condition fails: C*sum = " + std::to_string(static_cast<double>(tc.value)) +
                          " >= 2");
  }
  if (t_max < 1) throw ValidationError("t_max must be >= 1");
  ConstructionParams params;
  params.M = M;
  params.C = C;
  params.theta = theta;
  const auto K = to_u64((C * ExactRational(big_from_u64(M), 1)).floor());
  if (!K) throw ValidationError("K = floor(C*M) out of range");
  params.K = *K;
  params.t_max = t_max;
  return params;
}

LocalSet LocalSet::build(std::uint64_t p, std::uint64_t M, std::uint64_t K,
                         const ExactRational& theta) {
  if (!(theta > ExactRational(0)) || !(theta < ExactRational(1))) {
    throw ValidationError("local set requires 0 < theta < 1");
  }
  const LocalExponents e = alpha_beta(p, M, K);
  LocalSet A;
  A.p = p;
  A.M = M;
  A.K = K;
  A.alpha = e.alpha;
  A.beta = e.beta;
  A.B = e.B;
  A.m = e.m;
  A.theta = theta;
  const std::uint64_t pa = *checked_pow(p, e.alpha);
  A.lower_cut = (K + 1 + pa - 1) / pa;
  std::uint64_t u = 1 % A.m;
  for (std::uint64_t q : sieve_primes(M)) {
    if (q != p) u = mul_mod(u, pow_mod(q, floor_log(q, M), A.m), A.m);
  }
  A.u_p_residue = u;
  return A;
}

LocalSet LocalSet::build(std::uint64_t p, const ConstructionParams& params) {
  return build(p, params.M, params.K, params.theta);
}

bool LocalSet::contains(std::uint64_t y) const {
  if (y >= m) throw ValidationError("local_set_contains: residue out of range");
  if (y == 0) return true;
  if (y < lower_cut) return false;
  const BigInt num = theta.numerator();
  const BigInt den = theta.denominator();
  std::uint64_t pb = 1;
  for (unsigned b = 1; b < B; ++b) {
    pb *= p;
    const std::uint64_t s = y % pb;
    // s >= theta * p^b  <=>  s * den >= num * p^b
    if (s != 0 && big_from_u64(s) * den < num * big_from_u64(pb)) return false;
  }
  return true;
}

std::vector<std::uint8_t> membership_table(const LocalSet& A, std::uint64_t budget) {
  if (A.m > budget) {
    throw BudgetExceeded("local set modulus " + std::to_string(A.m) + " exceeds budget " +
                         std::to_string(budget));
  }
  // per-level strip thresholds ceil(theta * p^b), so membership is integer-only
  std::vector<std::uint64_t> pb(A.B, 1), cut(A.B, 0);
  for (unsigned b = 1; b < A.B; ++b) {
    pb[b] = pb[b - 1] * A.p;
    cut[b] = *to_u64((A.theta * ExactRational(big_from_u64(pb[b]), 1)).ceil());
  }
  std::vector<std::uint8_t> table(A.m, 0);
  table[0] = 1;
  for (std::uint64_t y = std::max<std::uint64_t>(1, A.lower_cut); y < A.m; ++y) {
    bool ok = true;
    for (unsigned b = 1; b < A.B && ok; ++b) {
      const std::uint64_t s = y % pb[b];
      ok = s == 0 || s >= cut[b];
    }
    table[y] = ok ? 1 : 0;
  }
  return table;
}

std::uint64_t local_set_size(const LocalSet& A, std::uint64_t budget) {
  std::uint64_t n = 0;
  for (std::uint8_t v : membership_table(A, budget)) n += v;
  return n;
}

}  // namespace kummerlab
