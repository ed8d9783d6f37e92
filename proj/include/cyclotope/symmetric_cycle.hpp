#pragma once

#include <array>
#include <cstdint>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "cyclotope/tope.hpp"

namespace cyclotope {

/**
 * Exact rational matrix stored as an integer numerator and a common positive
 * denominator: the represented value is numer / denom. Matrix indices are the
 * usual 0-based Eigen ones; row r corresponds to ground element r + 1.
 */
template <typename Scalar = std::int64_t>
struct ScaledMatrix {
  using Numerator = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Numerator numer;
  Scalar denom = 1;

  Eigen::Index rows() const { return numer.rows(); }
  Eigen::Index cols() const { return numer.cols(); }
  Scalar operator()(Eigen::Index r, Eigen::Index c) const { return numer(r, c); }
};

/**
 * The distinguished symmetric 2t-cycle in H(t,2):
 *   R^0 = T(+),  R^s = T(+) with coordinates 1..s negated (1 <= s <= t-1),
 *   R^{k+t} = -R^k.
 * Cyclically consecutive vertices differ in exactly one coordinate.
 */
class SymmetricCycle {
public:
  explicit SymmetricCycle(int t);

  int t() const noexcept { return t_; }
  /// Vertex R^k for 0 <= k < 2t.
  const Tope& vertex(int k) const;
  const std::vector<Tope>& vertices() const noexcept { return vertices_; }

private:
  int t_;
  std::vector<Tope> vertices_;
};

SymmetricCycle build_cycle(int t);

/// M: rows R^0, ..., R^{t-1}; denom 1.
ScaledMatrix<> cycle_matrix(const SymmetricCycle& cycle);
ScaledMatrix<> cycle_matrix(int t);

/// One nonzero of a sparse row: 1-based column and integer value.
struct RowEntry {
  int col;
  int value;
};

/// Row i (1-based) of 2*M^{-1}: sigma(i) - sigma(i+1) for i < t,
/// sigma(1) + sigma(t) for i = t.
std::array<RowEntry, 2> inverse_row(int t, int i);

/// 2*M^{-1} as an integer matrix with denom 2. Any integer Scalar is exact:
/// each column has at most three nonzero entries of magnitude 1.
template <typename Scalar = std::int64_t>
ScaledMatrix<Scalar> inverse_rows(int t) {
  static_assert(std::is_integral_v<Scalar> && std::is_signed_v<Scalar>);
  require_dimension(t);
  using Matrix = typename ScaledMatrix<Scalar>::Numerator;
  ScaledMatrix<Scalar> inv{Matrix::Zero(t, t), Scalar{2}};
  for (int i = 1; i <= t; ++i) {
    for (const auto& [col, value] : inverse_row(t, i)) inv.numer(i - 1, col - 1) += static_cast<Scalar>(value);
  }
  return inv;
}

/// M * M^T (denom 1), the Toeplitz matrix with entries t - 2|j - i|.
ScaledMatrix<> gram_matrix(int t);
std::int64_t gram_entry(int t, int i, int j);

/// (2M^{-1})(2M^{-1})^T, i.e. M^{-1}(M^{-1})^T with denom 4.
ScaledMatrix<> omega_matrix(int t);

/// 4*omega(i,j), the dot product of rows i and j of 2*M^{-1}.
std::int64_t omega_entry(int t, int i, int j);

}  // namespace cyclotope
