#pragma once

#include <cstdint>
#include <vector>

#include "cyclotope/symmetric_cycle.hpp"

namespace cyclotope {

struct OracleResult {
  /// Cycle-vertex positions k in [0, 2t) of the smallest representation, ascending.
  std::vector<int> minimal_set;
  /// Exactly one inclusion-minimal representation exists.
  bool unique = false;
  std::uint64_t candidates_checked = 0;
  int minimal_cardinality = 0;
  int minimal_cardinality_count = 0;
  int inclusion_minimal_count = 0;
  std::size_t solutions = 0;
};

inline constexpr int kOracleCap = 10;

/**
 * Exhaustive search over all 2^{2t} subsets of the cycle's vertices for those
 * whose entrywise sum is the tope. Among the solutions it identifies the
 * inclusion-minimal ones (solutions containing no other solution) and reports
 * the one of smallest cardinality. Throws BudgetExceeded when t > cap.
 */
OracleResult bruteforce_minimal_decomposition(const Tope& tope, const SymmetricCycle& cycle, int cap = kOracleCap);

}  // namespace cyclotope
