#include "cyclotope/equinumerosity.hpp"

#include <string>
#include <vector>

#include "cyclotope/decomposition.hpp"
#include "cyclotope/symmetric_cycle.hpp"

namespace cyclotope {

CriterionReport equal_size_criterion(const Tope& tope, const GroundSubset& subset, bool with_oracle) {
  const int t = tope.t();
  if (subset.t() != t) {
    throw Error(ErrorKind::DimensionMismatch, "tope and subset dimensions differ");
  }
  if (subset.is_full()) {
    throw Error(ErrorKind::NotProperSubset, "A = E_t; use |Q(-T)| = |Q(T)| instead");
  }
  CriterionReport report;
  for (int i = 1; i < t; ++i) {
    if (subset.contains(i) != subset.contains(i + 1)) report.lhs_sum += tope(i) * tope(i + 1);
  }
  report.boundary_split = subset.boundary_count() == 1;
  report.rhs = report.boundary_split ? tope(1) * tope(t) : 0;
  report.equal = report.lhs_sum == report.rhs;
  if (with_oracle) {
    report.direct_equal =
        spectrum_fast(tope).support_size() == spectrum_fast(reorient(tope, subset)).support_size();
  }
  return report;
}

std::int64_t eq31_indicator(const Tope& first, const Tope& second) {
  const auto separated = separation_set(first, second);
  const int t = first.t();
  std::vector<bool> in(static_cast<std::size_t>(t) + 1, false);
  for (int s : separated.members()) in[static_cast<std::size_t>(s)] = true;
  std::int64_t total = 0;
  // O(t^2) over all pairs; omega_entry is O(1).
  for (int i = 1; i < t; ++i) {
    const bool i_in = in[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= t; ++j) {
      if (i_in == in[static_cast<std::size_t>(j)]) continue;
      total += static_cast<std::int64_t>(first(i)) * first(j) * omega_entry(t, i, j);
    }
  }
  return total;
}

bool corollary_equal_size(const GroundSubset& a, const GroundSubset& b) {
  if (a.t() != b.t()) throw Error(ErrorKind::DimensionMismatch, "subset dimensions differ");
  if (a.is_empty() || b.is_empty()) throw Error(ErrorKind::EmptySet, "corollary needs nonempty subsets");
  const int rho_a = interval_partition(a).rho();
  const int rho_b = interval_partition(b).rho();
  const bool a_touches = a.boundary_count() > 0;
  const bool b_touches = b.boundary_count() > 0;
  if (a_touches == b_touches) return rho_a == rho_b;
  if (a_touches) return rho_b == rho_a - 1;
  return rho_a == rho_b - 1;
}

}  // namespace cyclotope
