#pragma once

#include <cstddef>
#include <vector>

namespace kummerlab {

/// e_a(weights) by the ascending-degree dynamic program; e_0 = 1.
long double elem_sym(const std::vector<long double>& weights, std::size_t a);

/// All of e_0..e_n.
std::vector<long double> elem_sym_all(const std::vector<long double>& weights);

/// sum_p w_p e_{k-1}(weights without p) against k e_k(weights).
struct PivotCheck {
  long double lhs = 0;
  long double rhs = 0;
  long double rel_error = 0;
};

PivotCheck pivot_identity(const std::vector<long double>& weights, std::size_t k);

/// pivot_identity over many lists, evaluated on `workers` threads.
std::vector<PivotCheck> pivot_identity_batch(const std::vector<std::vector<long double>>& lists,
                                             std::size_t k, unsigned workers = 1);

}  // namespace kummerlab
