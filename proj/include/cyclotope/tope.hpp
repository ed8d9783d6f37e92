#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cyclotope/error.hpp"

namespace cyclotope {

/// Row vector of small signed integers; used for topes and spectra.
using SignVector = Eigen::Matrix<std::int8_t, 1, Eigen::Dynamic>;

/// Integer row vector wide enough for sums of cycle vertices and products
/// with the scaled matrices.
template <typename Scalar = std::int64_t>
using IntRow = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

/**
 * A vertex of the hypercube graph H(t,2): a length-t row vector over {+1,-1}.
 *
 * Public indexing is 1-based over the ground set E_t = {1,...,t}. Storage is
 * one signed byte per coordinate. The mask form used by from_mask()/mask()
 * maps bit (e-1) set to T(e) = -1 and clear to T(e) = +1.
 */
class Tope {
public:
  explicit Tope(SignVector signs);

  static Tope positive(int t);
  static Tope negative(int t);
  static Tope from_mask(int t, std::uint64_t mask);
  /// Parses a '+'/'-' string such as "++-+-".
  static Tope parse(std::string_view text);

  int t() const noexcept { return static_cast<int>(signs_.size()); }
  int operator()(int e) const;
  const SignVector& signs() const noexcept { return signs_; }

  /// Requires t <= 64.
  std::uint64_t mask() const;
  std::string to_string() const;

  Tope operator-() const;

  friend bool operator==(const Tope& a, const Tope& b) { return a.signs_ == b.signs_; }

private:
  SignVector signs_;
};

/// A subset of E_t kept as sorted distinct 1-based members.
class GroundSubset {
public:
  GroundSubset(int t, std::vector<int> members);

  static GroundSubset empty(int t);
  static GroundSubset full(int t);
  static GroundSubset from_mask(int t, std::uint64_t mask);
  /// Parses "2,3,5" or "none".
  static GroundSubset parse(int t, std::string_view text);

  int t() const noexcept { return t_; }
  /// Ascending elements. A temporary hands its storage over instead of a view.
  std::span<const int> members() const& noexcept { return members_; }
  std::vector<int> members() && noexcept { return std::move(members_); }
  std::size_t size() const noexcept { return members_.size(); }
  bool is_empty() const noexcept { return members_.empty(); }
  bool contains(int e) const;
  bool is_full() const noexcept { return static_cast<int>(members_.size()) == t_; }

  /// Number of boundary elements of {1,t} that belong to the set.
  int boundary_count() const;

  GroundSubset complement() const;
  std::uint64_t mask() const;
  std::string to_string() const;

  friend bool operator==(const GroundSubset&, const GroundSubset&) = default;

private:
  int t_;
  std::vector<int> members_;
};

struct Interval {
  int first;
  int last;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Maximal runs of consecutive integers; consecutive intervals satisfy
/// last + 2 <= next.first.
struct IntervalPartition {
  std::vector<Interval> intervals;

  int rho() const noexcept { return static_cast<int>(intervals.size()); }
};

Tope reorient(const Tope& tope, const GroundSubset& subset);
GroundSubset negative_part(const Tope& tope);
GroundSubset separation_set(const Tope& first, const Tope& second);
IntervalPartition interval_partition(const GroundSubset& subset);

/// Inner product of two topes.
std::int64_t inner(const Tope& a, const Tope& b);

struct MeetJoin {
  std::int64_t meet;
  std::int64_t join;

  friend bool operator==(const MeetJoin&, const MeetJoin&) = default;
};

/// |T1- cap T2-| and |T1- cup T2-| from inner products alone.
MeetJoin negpart_meet_join_cards(const Tope& first, const Tope& second);

}  // namespace cyclotope
