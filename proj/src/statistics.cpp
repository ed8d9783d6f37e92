#include "cyclotope/statistics.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <tuple>

#include "cyclotope/decomposition.hpp"
#include "cyclotope/parallel.hpp"

namespace cyclotope {

namespace {

void require_odd_size(int t, int l, int min_l) {
  require_dimension(t);
  if (l % 2 == 0 || l < min_l || l > t) {
    throw Error(ErrorKind::InvalidArgument, "decomposition size l=" + std::to_string(l) +
                                                " must be odd and in [" + std::to_string(min_l) + ",t]");
  }
}

void require_enumerable(int t, int cap) {
  require_dimension(t);
  if (cap > 62) throw Error(ErrorKind::InvalidArgument, "enumeration cap above 62 is not supported");
  if (t > cap) {
    throw Error(ErrorKind::CapExceeded, "t=" + std::to_string(t) + " exceeds the enumeration cap " +
                                            std::to_string(cap) + "; use the formula path");
  }
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt comp_count(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) return 0;
  if (m == 0) return n == 0 ? 1 : 0;
  return binomial(n - 1, m - 1);
}

BigInt count_topes_by_size(int t, int l) {
  require_odd_size(t, l, 1);
  return 2 * binomial(t, l);
}

bool CountForms::agree() const {
  return composition == composition_binomial && composition == binomial && composition == shifted_composition;
}

CountForms count_forms(int t, int j, int l) {
  const std::int64_t h = (l - 1) / 2;
  const std::int64_t a = j;
  const std::int64_t b = std::int64_t{t} - j;
  CountForms f;
  f.composition = 2 * comp_count(h + 1, a) * comp_count(h + 1, b) + comp_count(h + 1, a) * comp_count(h, b) +
                  comp_count(h, a) * comp_count(h + 1, b);
  f.composition_binomial = 2 * cyclotope::binomial(a - 1, h) * cyclotope::binomial(b - 1, h) +
                           cyclotope::binomial(a - 1, h) * cyclotope::binomial(b - 1, h - 1) +
                           cyclotope::binomial(a - 1, h - 1) * cyclotope::binomial(b - 1, h);
  f.binomial = cyclotope::binomial(a - 1, h) * cyclotope::binomial(b, h) +
               cyclotope::binomial(b - 1, h) * cyclotope::binomial(a, h);
  f.shifted_composition = comp_count(h + 1, a) * comp_count(h + 1, b + 1) + comp_count(h + 1, b) * comp_count(h + 1, a + 1);
  return f;
}

BigInt count_by_negpart_and_size(int t, int j, int l) {
  require_odd_size(t, l, 3);
  if (j < 0 || j > t) throw Error(ErrorKind::IndexOutOfRange, "negative-part size j=" + std::to_string(j));
  const int h = (l - 1) / 2;
  if (j < h || j > t - h) return 0;
  const auto forms = count_forms(t, j, l);
  if (!forms.agree()) {
    throw InternalError("closed forms disagree at t=" + std::to_string(t) + " j=" + std::to_string(j) +
                        " l=" + std::to_string(l));
  }
  return forms.composition;
}

BigInt count_size3(int t, int j) { return BigInt(2) * j * (t - j) - t; }

BigInt count_lowest_negpart(int t, int l) { return binomial(t - (l + 1) / 2, (l - 1) / 2); }

std::string_view to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::LeftOnly: return "left-only";
    case BoundaryClass::RightOnly: return "right-only";
    case BoundaryClass::BothEnds: return "both-ends";
    case BoundaryClass::Neither: return "neither";
  }
  return "unknown";
}

BoundaryClass parse_boundary_class(std::string_view text) {
  for (auto c : kBoundaryClasses) {
    if (to_string(c) == text) return c;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown boundary class \"" + std::string(text) + "\"");
}

BoundaryClass classify_boundary(const GroundSubset& subset) {
  const bool first = subset.contains(1);
  const bool last = subset.contains(subset.t());
  if (first && last) return BoundaryClass::BothEnds;
  if (first) return BoundaryClass::LeftOnly;
  if (last) return BoundaryClass::RightOnly;
  return BoundaryClass::Neither;
}

int runs_for_size(int l, BoundaryClass c) { return c == BoundaryClass::Neither ? (l - 1) / 2 : (l + 1) / 2; }

JWindow class_window(int t, int l, BoundaryClass c) {
  const int h = (l - 1) / 2;
  switch (c) {
    case BoundaryClass::LeftOnly:
    case BoundaryClass::RightOnly: return {h + 1, t - h - 1};
    case BoundaryClass::BothEnds: return {h + 1, t - h};
    case BoundaryClass::Neither: return {h, t - h - 1};
  }
  return {1, 0};
}

BigInt structured_counts(int t, int l, BoundaryClass c, std::optional<int> j) {
  require_odd_size(t, l, 3);
  const bool ends_outside = c == BoundaryClass::LeftOnly || c == BoundaryClass::RightOnly;
  if (!j) return ends_outside ? binomial(t - 1, l) : binomial(t - 1, l - 1);

  const auto window = class_window(t, l, c);
  if (*j < window.lo || *j > window.hi) return 0;
  const std::int64_t h = (l - 1) / 2;
  const std::int64_t neg = *j;
  const std::int64_t pos = std::int64_t{t} - *j;
  switch (c) {
    case BoundaryClass::LeftOnly:
    case BoundaryClass::RightOnly: return binomial(neg - 1, h) * binomial(pos - 1, h);
    case BoundaryClass::BothEnds: return binomial(neg - 1, h) * binomial(pos - 1, h - 1);
    case BoundaryClass::Neither: return binomial(neg - 1, h - 1) * binomial(pos - 1, h);
  }
  return 0;
}

BigInt subsets_by_runs(int t, int rho, int touching) {
  require_dimension(t);
  if (rho < 0) throw Error(ErrorKind::InvalidArgument, "negative run count");
  switch (touching) {
    case 0: return binomial(t - 1, 2 * std::int64_t{rho});
    case 1: return 2 * binomial(t - 1, 2 * std::int64_t{rho} - 1);
    case 2: return binomial(t - 1, 2 * (std::int64_t{rho} - 1));
    default: throw Error(ErrorKind::InvalidArgument, "touching must be 0, 1 or 2");
  }
}

BigInt CountTable::count(int j, int l) const {
  for (const auto& row : rows) {
    if (row.j == j && row.l == l) return row.count;
  }
  return 0;
}

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& row : rows) sum += row.count;
  return sum;
}

BigInt CountTable::column_total(int l) const {
  BigInt sum = 0;
  for (const auto& row : rows) {
    if (row.l == l) sum += row.count;
  }
  return sum;
}

CountTable formula_statistics(int t) {
  require_dimension(t);
  CountTable table{t, {}};
  for (int l = 1; l <= t; l += 2) {
    for (int j = 0; j <= t; ++j) {
      BigInt count = l == 1 ? BigInt((j == 0 || j == t) ? 1 : 2) : count_by_negpart_and_size(t, j, l);
      table.rows.push_back({j, l, std::move(count)});
    }
  }
  return table;
}

CountTable enumerate_statistics(int t, int cap) {
  require_enumerable(t, cap);
  const auto side = static_cast<std::size_t>(t + 1);
  using Tally = std::vector<std::uint64_t>;  // [l * side + j]
  const Tally tally = parallel_tally(
      std::uint64_t{1} << t, Tally(side * side, 0),
      [t, side](std::uint64_t begin, std::uint64_t end, Tally& local) {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const auto x = spectrum_fast(Tope::from_mask(t, mask));
          const auto l = static_cast<std::size_t>(x.support_size());
          const auto j = static_cast<std::size_t>(std::popcount(mask));
          ++local[l * side + j];
        }
      },
      [](Tally& into, const Tally& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });

  CountTable table{t, {}};
  for (int l = 1; l <= t; l += 2) {
    for (int j = 0; j <= t; ++j) {
      table.rows.push_back({j, l, BigInt(tally[static_cast<std::size_t>(l) * side + static_cast<std::size_t>(j)])});
    }
  }
  // Even sizes must never occur.
  for (std::size_t l = 0; l < side; l += 2) {
    for (std::size_t j = 0; j < side; ++j) {
      if (tally[l * side + j] != 0) throw InternalError("even decomposition size encountered");
    }
  }
  return table;
}

std::vector<ClassRow> enumerate_class_tallies(int t, int cap) {
  require_enumerable(t, cap);
  using Key = std::tuple<int, int, int, int>;  // l, class, j, rho
  using Tally = std::map<Key, std::uint64_t>;
  const Tally tally = parallel_tally(
      std::uint64_t{1} << t, Tally{},
      [t](std::uint64_t begin, std::uint64_t end, Tally& local) {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const auto tope = Tope::from_mask(t, mask);
          const int l = spectrum_fast(tope).support_size();
          if (l < 3) continue;
          const auto negatives = negative_part(tope);
          const int rho = interval_partition(negatives).rho();
          const auto c = static_cast<int>(classify_boundary(negatives));
          ++local[{l, c, static_cast<int>(negatives.size()), rho}];
        }
      },
      [](Tally& into, const Tally& from) {
        for (const auto& [key, n] : from) into[key] += n;
      });

  std::vector<ClassRow> rows;
  rows.reserve(tally.size());
  for (const auto& [key, n] : tally) {
    const auto& [l, c, j, rho] = key;
    rows.push_back({l, static_cast<BoundaryClass>(c), j, rho, n});
  }
  return rows;
}

}  // namespace cyclotope
