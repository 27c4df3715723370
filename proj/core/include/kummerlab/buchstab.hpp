#pragma once

#include <cstdint>
#include <vector>

#include "kummerlab/rational.hpp"

namespace kummerlab {

/// Both sides of
///   1[every p | n lies in (M, CM]] = 1[every p | n exceeds M] * sum_{d | n, p | d => p > CM} mu(d)
/// for squarefree n.
struct BuchstabResult {
  int lhs = 0;
  int rhs = 0;
  bool equal() const { return lhs == rhs; }
};

/// Rejects n = 0 and non-squarefree n.
BuchstabResult buchstab_check(std::uint64_t n, std::uint64_t M, const ExactRational& C);

struct BuchstabScan {
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> failures;
};

/// Every squarefree n <= limit, factored through a least-prime-factor sieve.
BuchstabScan buchstab_scan(std::uint32_t limit, std::uint64_t M, const ExactRational& C,
                           unsigned workers = 1);

}  // namespace kummerlab
