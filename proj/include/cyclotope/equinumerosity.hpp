#pragma once

#include <cstdint>
#include <optional>

#include "cyclotope/tope.hpp"

namespace cyclotope {

/**
 * Outcome of the boundary-sum test for |Q(T,R)| = |Q(-A T,R)|.
 *
 * lhs_sum is the sum of T(i) T(i+1) over i in [t-1] with exactly one of
 * i, i+1 in A. rhs is T(1) T(t) when exactly one of 1, t is in A, else 0.
 */
struct CriterionReport {
  bool equal = false;
  std::int64_t lhs_sum = 0;
  std::int64_t rhs = 0;
  bool boundary_split = false;  ///< exactly one of 1, t lies in A
  std::optional<bool> direct_equal;
};

/// A must be a proper subset of E_t. With with_oracle, also compares the two
/// decomposition sizes directly.
CriterionReport equal_size_criterion(const Tope& tope, const GroundSubset& subset, bool with_oracle = false);

/// 4 * sum over i < j with exactly one of i, j in S(first, second) of
/// first(i) first(j) omega(i,j). Zero iff the two decompositions have equal size.
std::int64_t eq31_indicator(const Tope& first, const Tope& second);

/// Equal decomposition sizes for -A T(+) and -B T(+), decided from the run
/// counts and boundary contact of the nonempty sets A and B.
bool corollary_equal_size(const GroundSubset& a, const GroundSubset& b);

}  // namespace cyclotope
