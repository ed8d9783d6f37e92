#pragma once

#include <cstdint>
#include <vector>

#include "cyclotope/symmetric_cycle.hpp"
#include "cyclotope/tope.hpp"

namespace cyclotope {

/**
 * Coordinates x = T * M^{-1} of a tope in the basis R^0, ..., R^{t-1}.
 * Every coordinate lies in {-1, 0, +1}. Indexing through operator() is 1-based.
 */
class Spectrum {
public:
  explicit Spectrum(SignVector coords);

  /// sigma(s) * sign, the unit spectrum of the cycle vertex sign * R^{s-1}.
  static Spectrum unit(int t, int s, int sign = 1);

  int t() const noexcept { return static_cast<int>(coords_.size()); }
  int operator()(int i) const;
  const SignVector& coords() const noexcept { return coords_; }

  /// Number of nonzero coordinates, equal to the squared norm.
  int support_size() const;
  /// Sum of coordinates, i.e. <x, T(+)>.
  int sum() const;

  Spectrum operator-() const;

  friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.coords_ == b.coords_; }

private:
  SignVector coords_;
};

/// One element of Q(T,R): sign * R^index with index in [0, t-1].
struct Term {
  int sign;
  int index;

  /// Position of sign * R^index in the cycle's 2t-vertex list.
  int cycle_vertex(int t) const { return sign > 0 ? index : index + t; }

  friend bool operator==(const Term&, const Term&) = default;
};

/// The unique inclusion-minimal set of cycle vertices summing to a tope.
/// Terms are ordered by index ascending.
struct Decomposition {
  int t = 0;
  std::vector<Term> terms;

  int size() const noexcept { return static_cast<int>(terms.size()); }
  /// Entrywise sum of the signed cycle vertices.
  IntRow<> vertex_sum() const;
};

namespace detail {
/// Halves an exactly even product 2x into a spectrum; InternalError otherwise.
Spectrum halve_to_spectrum(const IntRow<>& twice);
void require_twice_inverse(int t, Eigen::Index rows, std::int64_t denom);
}  // namespace detail

/// x = T * M^{-1} by an exact integer matrix-vector product with 2*M^{-1}.
Spectrum spectrum_dense(const Tope& tope);

/// Same, reusing a precomputed inverse_rows<Scalar>(t). The product is
/// accumulated in Scalar, which is exact for every signed integer type.
template <typename Scalar>
Spectrum spectrum_dense(const Tope& tope, const ScaledMatrix<Scalar>& inverse) {
  detail::require_twice_inverse(tope.t(), inverse.rows(), static_cast<std::int64_t>(inverse.denom));
  const IntRow<Scalar> twice = tope.signs().template cast<Scalar>() * inverse.numer;
  return detail::halve_to_spectrum(twice.template cast<std::int64_t>());
}

/// x_1 = (T(1) + T(t)) / 2 and x_j = (T(j) - T(j-1)) / 2; O(t), no matrix.
Spectrum spectrum_fast(const Tope& tope);

/// Closed form read off the interval structure of the negative part,
/// dispatching on which of 1 and t belong to it.
Spectrum spectrum_intervals(const Tope& tope);

Decomposition decomposition_set(const Tope& tope);
Decomposition decomposition_from_spectrum(const Spectrum& x);

/// x * M computed exactly; a tope exactly when x is a spectrum.
IntRow<> synthesize(const Spectrum& x);
/// x * M as a tope; throws InvalidSpectrum when the product is not a sign vector.
Tope reconstruct(const Spectrum& x);

/// Spectrum of reorient(tope, flips) given the spectrum of tope, touching
/// only the rows of 2*M^{-1} indexed by flips.
Spectrum spectrum_update(const Spectrum& x, const Tope& tope, const GroundSubset& flips);

/// Spectrum of T(+) with the single coordinate s negated.
Spectrum y_vector(int s, int t);

/// (1 - |A|) sigma(1) + sum over s in A of y(s).
Spectrum spectrum_from_y_sum(const GroundSubset& subset);

/// |Q(first)| - |Q(second)| via the separation-set inner product, exactly.
std::int64_t size_difference(const Tope& first, const Tope& second);

/// |T-| recovered from the spectrum of T alone.
std::int64_t negpart_size_from_spectrum(const Spectrum& x);
/// |T1- cap T2-| and |T1- cup T2-| recovered from the two spectra.
MeetJoin negpart_meet_join_from_spectra(const Spectrum& first, const Spectrum& second);

}  // namespace cyclotope
