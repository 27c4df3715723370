#include "kummerlab/symmetric.hpp"

#include <cmath>

#include "kummerlab/errors.hpp"
#include "kummerlab/parallel.hpp"

namespace kummerlab {

std::vector<long double> elem_sym_all(const std::vector<long double>& weights) {
  std::vector<long double> e(weights.size() + 1, 0.0L);
  e[0] = 1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0)) throw ValidationError("elem_sym weights must be nonnegative");
    for (std::size_t d = i + 1; d >= 1; --d) e[d] += weights[i] * e[d - 1];
  }
  return e;
}

long double elem_sym(const std::vector<long double>& weights, std::size_t a) {
  if (a > weights.size()) throw ValidationError("elem_sym degree exceeds the number of weights");
  return elem_sym_all(weights)[a];
}

PivotCheck pivot_identity(const std::vector<long double>& weights, std::size_t k) {
  if (k < 1 || k > weights.size()) throw ValidationError("pivot identity needs 1 <= k <= n");
  PivotCheck c;
  std::vector<long double> rest;
  rest.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (j != i) rest.push_back(weights[j]);
    }
    c.lhs += weights[i] * elem_sym(rest, k - 1);
  }
  c.rhs = static_cast<long double>(k) * elem_sym(weights, k);
  const long double scale = std::fmax(std::fabs(c.rhs), std::fabs(c.lhs));
  c.rel_error = scale == 0 ? 0 : std::fabs(c.lhs - c.rhs) / scale;
  return c;
}

std::vector<PivotCheck> pivot_identity_batch(const std::vector<std::vector<long double>>& lists,
                                             std::size_t k, unsigned workers) {
  std::vector<PivotCheck> out(lists.size());
  parallel_blocks(lists.size(), workers, [&](std::size_t i) { out[i] = pivot_identity(lists[i], k); });
  return out;
}

}  // namespace kummerlab
