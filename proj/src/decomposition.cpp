#include "cyclotope/decomposition.hpp"

#include <string>

namespace cyclotope {

namespace {

void require_same_dimension(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimensions " + std::to_string(a) + " and " + std::to_string(b) + " differ");
  }
}

std::int8_t to_trit(std::int64_t v) {
  if (v < -1 || v > 1) throw InternalError("spectrum coordinate " + std::to_string(v) + " outside {-1,0,1}");
  return static_cast<std::int8_t>(v);
}

std::int8_t halve(std::int64_t twice) {
  if (twice % 2 != 0) throw InternalError("inexact halving of " + std::to_string(twice));
  return to_trit(twice / 2);
}

template <typename Derived>
Spectrum to_spectrum(const Eigen::MatrixBase<Derived>& values) {
  SignVector coords(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) coords[i] = to_trit(values(i));
  return Spectrum(std::move(coords));
}

void add_unit(IntRow<>& acc, int s, std::int64_t coefficient) { acc[s - 1] += coefficient; }

/// w * (2 M^{-1}) through the sparse rows of 2 M^{-1}.
IntRow<> times_twice_inverse(const IntRow<>& w) {
  const int t = static_cast<int>(w.size());
  IntRow<> out = IntRow<>::Zero(t);
  for (int i = 1; i <= t; ++i) {
    if (w[i - 1] == 0) continue;
    for (const auto& [col, value] : inverse_row(t, i)) out[col - 1] += w[i - 1] * value;
  }
  return out;
}

}  // namespace

Spectrum::Spectrum(SignVector coords) : coords_(std::move(coords)) {
  require_dimension(t());
  for (Eigen::Index i = 0; i < coords_.size(); ++i) {
    if (coords_[i] < -1 || coords_[i] > 1) {
      throw Error(ErrorKind::InvalidSpectrum, "coordinate " + std::to_string(i + 1) + " outside {-1,0,1}");
    }
  }
}

Spectrum Spectrum::unit(int t, int s, int sign) {
  require_dimension(t);
  if (s < 1 || s > t) throw Error(ErrorKind::IndexOutOfRange, "unit index " + std::to_string(s));
  SignVector c = SignVector::Zero(t);
  c[s - 1] = static_cast<std::int8_t>(sign < 0 ? -1 : 1);
  return Spectrum(std::move(c));
}

int Spectrum::operator()(int i) const {
  if (i < 1 || i > t()) throw Error(ErrorKind::IndexOutOfRange, "spectrum index " + std::to_string(i));
  return coords_[i - 1];
}

int Spectrum::support_size() const { return static_cast<int>((coords_.array() != 0).count()); }

int Spectrum::sum() const { return static_cast<int>(coords_.cast<int>().sum()); }

Spectrum Spectrum::operator-() const { return Spectrum(SignVector(-coords_)); }

IntRow<> Decomposition::vertex_sum() const {
  IntRow<> out = IntRow<>::Zero(t);
  for (const auto& term : terms) {
    for (int e = 1; e <= t; ++e) out[e - 1] += term.sign * (e <= term.index ? -1 : 1);
  }
  return out;
}

namespace detail {

Spectrum halve_to_spectrum(const IntRow<>& twice) {
  SignVector coords(twice.size());
  for (Eigen::Index i = 0; i < twice.size(); ++i) coords[i] = halve(twice[i]);
  return Spectrum(std::move(coords));
}

void require_twice_inverse(int t, Eigen::Index rows, std::int64_t denom) {
  require_same_dimension(t, static_cast<int>(rows));
  if (denom != 2) throw Error(ErrorKind::InvalidArgument, "expected 2*M^{-1} with denom 2");
}

}  // namespace detail

Spectrum spectrum_dense(const Tope& tope) { return spectrum_dense(tope, inverse_rows(tope.t())); }

Spectrum spectrum_fast(const Tope& tope) {
  const int t = tope.t();
  const auto& s = tope.signs();
  SignVector coords(t);
  coords[0] = halve(static_cast<std::int64_t>(s[0]) + s[t - 1]);
  for (int j = 1; j < t; ++j) coords[j] = halve(static_cast<std::int64_t>(s[j]) - s[j - 1]);
  return Spectrum(std::move(coords));
}

Spectrum spectrum_intervals(const Tope& tope) {
  const int t = tope.t();
  const auto negatives = negative_part(tope);
  if (negatives.is_empty()) return Spectrum::unit(t, 1);

  const auto runs = interval_partition(negatives).intervals;
  const int rho = static_cast<int>(runs.size());
  const bool has_first = negatives.contains(1);
  const bool has_last = negatives.contains(t);

  IntRow<> acc = IntRow<>::Zero(t);
  // Ends of runs j_k + 1 enter with +1; starts i_l with -1. Which of them
  // participate depends on whether 1 and t are negative.
  const int ends_used = has_last ? rho - 1 : rho;
  const int first_start = (has_first && !has_last) ? 1 : 0;
  for (int k = 0; k < ends_used; ++k) add_unit(acc, runs[static_cast<std::size_t>(k)].last + 1, 1);
  for (int l = first_start; l < rho; ++l) add_unit(acc, runs[static_cast<std::size_t>(l)].first, -1);
  if (!has_first && !has_last) add_unit(acc, 1, 1);
  return to_spectrum(acc);
}

Decomposition decomposition_from_spectrum(const Spectrum& x) {
  Decomposition d{x.t(), {}};
  for (int i = 1; i <= x.t(); ++i) {
    if (x(i) != 0) d.terms.push_back({x(i), i - 1});
  }
  return d;
}

Decomposition decomposition_set(const Tope& tope) { return decomposition_from_spectrum(spectrum_fast(tope)); }

IntRow<> synthesize(const Spectrum& x) {
  const int t = x.t();
  const std::int64_t total = x.sum();
  IntRow<> out(t);
  std::int64_t prefix = 0;
  for (int e = 1; e <= t; ++e) {
    prefix += x(e);
    // R^{i-1}(e) is -1 exactly when i > e.
    out[e - 1] = 2 * prefix - total;
  }
  return out;
}

Tope reconstruct(const Spectrum& x) {
  const IntRow<> v = synthesize(x);
  SignVector s(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 1 && v[i] != -1) {
      throw Error(ErrorKind::InvalidSpectrum, "x*M is not a sign vector at coordinate " + std::to_string(i + 1));
    }
    s[i] = static_cast<std::int8_t>(v[i]);
  }
  return Tope(std::move(s));
}

Spectrum spectrum_update(const Spectrum& x, const Tope& tope, const GroundSubset& flips) {
  require_same_dimension(x.t(), tope.t());
  require_same_dimension(x.t(), flips.t());
  const int t = x.t();
  IntRow<> acc = x.coords().cast<std::int64_t>();
  for (int s : flips.members()) {
    const int sign = tope(s);
    for (const auto& [col, value] : inverse_row(t, s)) acc[col - 1] -= sign * value;
  }
  return to_spectrum(acc);
}

Spectrum y_vector(int s, int t) {
  require_dimension(t);
  if (s < 1 || s > t) {
    throw Error(ErrorKind::IndexOutOfRange, "y(s) needs 1 <= s <= t, got s=" + std::to_string(s));
  }
  if (s == 1) return Spectrum::unit(t, 2);
  if (s == t) return Spectrum::unit(t, t, -1);
  SignVector c = SignVector::Zero(t);
  c[0] = 1;
  c[s - 1] = -1;
  c[s] = 1;
  return Spectrum(std::move(c));
}

Spectrum spectrum_from_y_sum(const GroundSubset& subset) {
  const int t = subset.t();
  IntRow<> acc = IntRow<>::Zero(t);
  acc[0] = 1 - static_cast<std::int64_t>(subset.size());
  for (int s : subset.members()) acc += y_vector(s, t).coords().cast<std::int64_t>();
  return to_spectrum(acc);
}

std::int64_t size_difference(const Tope& first, const Tope& second) {
  const auto separated = separation_set(first, second);
  const IntRow<> signs = first.signs().cast<std::int64_t>();
  IntRow<> flipped = IntRow<>::Zero(first.t());
  for (int s : separated.members()) flipped[s - 1] = signs[s - 1];
  const IntRow<> kept = signs - flipped;
  // 4 <u M^{-1}, v M^{-1}> = <u (2M^{-1}), v (2M^{-1})>
  return times_twice_inverse(kept).dot(times_twice_inverse(flipped));
}

std::int64_t negpart_size_from_spectrum(const Spectrum& x) {
  std::int64_t weighted = 0;
  for (int i = 1; i <= x.t(); ++i) weighted += static_cast<std::int64_t>(x(i)) * i;
  switch (x.sum()) {
    case -1: return x.t() + 1 + weighted;
    case 1: return -1 + weighted;
    default: throw Error(ErrorKind::InvalidSpectrum, "coordinate sum must be +1 or -1");
  }
}

MeetJoin negpart_meet_join_from_spectra(const Spectrum& first, const Spectrum& second) {
  require_same_dimension(first.t(), second.t());
  const int s1 = first.sum();
  const int s2 = second.sum();
  if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1)) {
    throw Error(ErrorKind::InvalidSpectrum, "coordinate sums must be +1 or -1");
  }
  const std::int64_t t = first.t();
  const std::int64_t cross = synthesize(first).dot(synthesize(second));
  std::int64_t weighted = 0;
  for (int i = 1; i <= first.t(); ++i) weighted += static_cast<std::int64_t>(first(i) + second(i)) * i;

  // Both sides scaled by 4.
  std::int64_t meet4 = cross + 2 * weighted;
  std::int64_t join4 = -cross + 2 * weighted;
  if (s1 == -1 && s2 == -1) {
    meet4 += 3 * t + 4;
    join4 += 5 * t + 4;
  } else if (s1 == -s2) {
    meet4 += t;
    join4 += 3 * t;
  } else {
    meet4 += -t - 4;
    join4 += t - 4;
  }
  if (meet4 % 4 != 0 || join4 % 4 != 0) throw Error(ErrorKind::InvalidSpectrum, "spectra are not tope spectra");
  return {meet4 / 4, join4 / 4};
}

}  // namespace cyclotope
