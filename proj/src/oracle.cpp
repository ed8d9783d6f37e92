#include "cyclotope/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace cyclotope {

OracleResult bruteforce_minimal_decomposition(const Tope& tope, const SymmetricCycle& cycle, int cap) {
  const int t = tope.t();
  if (cycle.t() != t) throw Error(ErrorKind::DimensionMismatch, "tope and cycle dimensions differ");
  if (t > cap || cap > 15) {
    throw Error(ErrorKind::BudgetExceeded, "oracle search over 2^" + std::to_string(2 * t) +
                                               " subsets exceeds the cap t <= " + std::to_string(cap));
  }
  const int n = 2 * t;
  const Eigen::RowVectorXi target = tope.signs().cast<int>();
  std::vector<Eigen::RowVectorXi> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  for (const auto& v : cycle.vertices()) vertices.push_back(v.signs().cast<int>());

  // Gray-code walk: each step toggles one vertex in or out of the running sum.
  std::vector<std::uint32_t> solutions;
  Eigen::RowVectorXi sum = Eigen::RowVectorXi::Zero(t);
  std::uint32_t subset = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const int bit = std::countr_zero(step);
    subset ^= std::uint32_t{1} << bit;
    if (subset & (std::uint32_t{1} << bit)) {
      sum += vertices[static_cast<std::size_t>(bit)];
    } else {
      sum -= vertices[static_cast<std::size_t>(bit)];
    }
    if (sum == target) solutions.push_back(subset);
  }
  if (solutions.empty()) throw InternalError("no subset of cycle vertices sums to " + tope.to_string());

  std::sort(solutions.begin(), solutions.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  // Every solution contains an inclusion-minimal one of no larger size, so
  // scanning by cardinality finds them all.
  std::vector<std::uint32_t> minimal;
  for (auto s : solutions) {
    const bool covers = std::any_of(minimal.begin(), minimal.end(), [s](std::uint32_t m) { return (m & s) == m; });
    if (!covers) minimal.push_back(s);
  }

  OracleResult result;
  result.candidates_checked = count;
  result.solutions = solutions.size();
  result.minimal_cardinality = std::popcount(solutions.front());
  result.minimal_cardinality_count = static_cast<int>(std::count_if(
      solutions.begin(), solutions.end(),
      [&](std::uint32_t s) { return std::popcount(s) == result.minimal_cardinality; }));
  result.inclusion_minimal_count = static_cast<int>(minimal.size());
  result.unique = minimal.size() == 1 && result.minimal_cardinality_count == 1;
  for (int k = 0; k < n; ++k) {
    if (solutions.front() & (std::uint32_t{1} << k)) result.minimal_set.push_back(k);
  }
  return result;
}

}  // namespace cyclotope
