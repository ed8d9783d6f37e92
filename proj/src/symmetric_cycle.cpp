#include "cyclotope/symmetric_cycle.hpp"

#include <cstdlib>
#include <string>

namespace cyclotope {

namespace {

void require_index(int t, int i) {
  if (i < 1 || i > t) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(i) + " outside [1," + std::to_string(t) + "]");
  }
}

}  // namespace

SymmetricCycle::SymmetricCycle(int t) : t_(t) {
  require_dimension(t);
  vertices_.reserve(2 * static_cast<std::size_t>(t));
  SignVector row = SignVector::Ones(t);
  for (int s = 0; s < t; ++s) {
    if (s > 0) row[s - 1] = -1;
    vertices_.emplace_back(row);
  }
  for (int k = 0; k < t; ++k) vertices_.push_back(-vertices_[static_cast<std::size_t>(k)]);
}

const Tope& SymmetricCycle::vertex(int k) const {
  if (k < 0 || k >= 2 * t_) {
    throw Error(ErrorKind::IndexOutOfRange, "cycle vertex " + std::to_string(k) + " out of range");
  }
  return vertices_[static_cast<std::size_t>(k)];
}

SymmetricCycle build_cycle(int t) { return SymmetricCycle(t); }

ScaledMatrix<> cycle_matrix(const SymmetricCycle& cycle) {
  const int t = cycle.t();
  ScaledMatrix<> m{ScaledMatrix<>::Numerator(t, t), 1};
  for (int r = 0; r < t; ++r) m.numer.row(r) = cycle.vertex(r).signs().cast<std::int64_t>();
  return m;
}

ScaledMatrix<> cycle_matrix(int t) { return cycle_matrix(build_cycle(t)); }

std::array<RowEntry, 2> inverse_row(int t, int i) {
  require_dimension(t);
  require_index(t, i);
  if (i < t) return {RowEntry{i, 1}, RowEntry{i + 1, -1}};
  return {RowEntry{1, 1}, RowEntry{t, 1}};
}

ScaledMatrix<> gram_matrix(int t) {
  const auto m = cycle_matrix(t);
  return {m.numer * m.numer.transpose(), 1};
}

std::int64_t gram_entry(int t, int i, int j) {
  require_dimension(t);
  require_index(t, i);
  require_index(t, j);
  return static_cast<std::int64_t>(t) - 2 * std::abs(j - i);
}

ScaledMatrix<> omega_matrix(int t) {
  const auto inv = inverse_rows(t);
  return {inv.numer * inv.numer.transpose(), 4};
}

std::int64_t omega_entry(int t, int i, int j) {
  const auto row_i = inverse_row(t, i);
  const auto row_j = inverse_row(t, j);
  std::int64_t dot = 0;
  for (const auto& a : row_i) {
    for (const auto& b : row_j) {
      if (a.col == b.col) dot += static_cast<std::int64_t>(a.value) * b.value;
    }
  }
  return dot;
}

}  // namespace cyclotope
