#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclotope/tope.hpp"

namespace cyclotope {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k), zero whenever n < 0, k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// c(m; n): compositions of n into m positive parts. c(0; 0) = 1.
BigInt comp_count(std::int64_t m, std::int64_t n);

/// Number of topes whose decomposition has odd size l: 2 C(t, l).
BigInt count_topes_by_size(int t, int l);

/// The four closed forms for |{T : |T-| = j, |Q(T,R)| = l}| inside the
/// nonvanishing window (l-1)/2 <= j <= t-(l-1)/2.
struct CountForms {
  BigInt composition;          ///< 2c(h+1;j)c(h+1;t-j) + c(h+1;j)c(h;t-j) + c(h;j)c(h+1;t-j)
  BigInt composition_binomial; ///< the same three products written with binomials
  BigInt binomial;             ///< C(j-1,h)C(t-j,h) + C(t-j-1,h)C(j,h)
  BigInt shifted_composition;  ///< c(h+1;j)c(h+1;t-j+1) + c(h+1;t-j)c(h+1;j+1)

  bool agree() const;
};

/// Raw forms with h = (l-1)/2; no window check.
CountForms count_forms(int t, int j, int l);

/// Zero outside the window, else the common value of all four forms; throws
/// InternalError if the forms disagree.
BigInt count_by_negpart_and_size(int t, int j, int l);

/// 2j(t-j) - t, the l = 3 column.
BigInt count_size3(int t, int j);

/// C(t-(l+1)/2, (l-1)/2), the count at the lowest nonvanishing j = (l-1)/2.
BigInt count_lowest_negpart(int t, int l);

/// Position of the negative part relative to the boundary elements {1, t}.
enum class BoundaryClass { LeftOnly, RightOnly, BothEnds, Neither };

inline constexpr BoundaryClass kBoundaryClasses[] = {BoundaryClass::LeftOnly, BoundaryClass::RightOnly,
                                                     BoundaryClass::BothEnds, BoundaryClass::Neither};

std::string_view to_string(BoundaryClass c);
BoundaryClass parse_boundary_class(std::string_view text);
BoundaryClass classify_boundary(const GroundSubset& subset);

/// Number of runs the negative part has when |Q| = l in the given class.
int runs_for_size(int l, BoundaryClass c);

struct JWindow {
  int lo;
  int hi;
};

/// Range of |T-| over which the per-j product applies.
JWindow class_window(int t, int l, BoundaryClass c);

/// Without j: the class total (C(t-1,l) or C(t-1,l-1)). With j: the per-j
/// product, zero outside class_window().
BigInt structured_counts(int t, int l, BoundaryClass c, std::optional<int> j = std::nullopt);

/// Subsets of E_t with rho runs meeting {1,t} in exactly `touching` elements.
BigInt subsets_by_runs(int t, int rho, int touching);

struct CountRow {
  int j;
  int l;
  BigInt count;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

/// Rows for every odd l in [1,t] and every j in [0,t], ordered by (l, j).
struct CountTable {
  int t = 0;
  std::vector<CountRow> rows;

  BigInt count(int j, int l) const;
  BigInt total() const;
  BigInt column_total(int l) const;
};

/// Formula path. The l = 1 rows count cycle vertices: one with |T-| = 0,
/// one with |T-| = t, and two for each j in [1, t-1].
CountTable formula_statistics(int t);

inline constexpr int kDefaultEnumerationCap = 20;

/// Tallies |T-| and |Q| over all 2^t topes; CapExceeded above cap.
CountTable enumerate_statistics(int t, int cap = kDefaultEnumerationCap);

struct ClassRow {
  int l;
  BoundaryClass boundary;
  int j;
  int rho;
  std::uint64_t count;
};

/// Enumerated counts of topes with |Q| = l >= 3, keyed by (l, class, j, rho).
std::vector<ClassRow> enumerate_class_tallies(int t, int cap = kDefaultEnumerationCap);

}  // namespace cyclotope
