#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "cyclotope/cli.hpp"
#include "cyclotope/decomposition.hpp"
#include "cyclotope/equinumerosity.hpp"
#include "cyclotope/oracle.hpp"
#include "cyclotope/statistics.hpp"
#include "cyclotope/symmetric_cycle.hpp"

namespace cyclotope::cli {

namespace {

// Pairwise sweeps are quadratic in 2^t.
constexpr int kPairSweepMax = 8;

class Reporter {
public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  /// body returns the number of cases checked, or throws/returns -1 on failure.
  void check(const std::string& name, const std::function<long long()>& body) {
    long long cases = -1;
    std::string detail;
    try {
      cases = body();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (cases < 0) {
      ok_ = false;
      out_ << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << '\n';
    } else {
      out_ << "ok   " << name << " (" << cases << " cases)\n";
    }
  }

  void skip(const std::string& name, const std::string& why) { out_ << "skip " << name << ": " << why << '\n'; }

  bool ok() const { return ok_; }

private:
  std::ostream& out_;
  bool ok_ = true;
};

std::uint64_t tope_count(int t) { return std::uint64_t{1} << t; }

}  // namespace

bool verify_all(int t, int oracle_max, int enumeration_cap, std::ostream& out) {
  require_dimension(t);
  Reporter report(out);
  out << "verify t=" << t << '\n';

  report.check("cycle-structure", [&] {
    const auto cycle = build_cycle(t);
    if (!(cycle.vertex(0) == Tope::positive(t))) return -1LL;
    for (int k = 0; k < 2 * t; ++k) {
      const auto& next = cycle.vertex((k + 1) % (2 * t));
      if (separation_set(cycle.vertex(k), next).size() != 1) return -1LL;
      if (k < t && !(cycle.vertex(k + t) == -cycle.vertex(k))) return -1LL;
      for (int m = 0; m < k; ++m) {
        if (cycle.vertex(m) == cycle.vertex(k)) return -1LL;
      }
    }
    return 2LL * t;
  });

  report.check("matrices", [&] {
    const auto m = cycle_matrix(t);
    const auto inv = inverse_rows(t);
    const auto twice_identity = ScaledMatrix<>::Numerator::Identity(t, t) * 2;
    if (m.numer * inv.numer != twice_identity || inv.numer * m.numer != twice_identity) return -1LL;
    const auto gram = gram_matrix(t);
    const auto omega = omega_matrix(t);
    for (int i = 1; i <= t; ++i) {
      for (int j = 1; j <= t; ++j) {
        if (gram(i - 1, j - 1) != gram_entry(t, i, j)) return -1LL;
        if (omega(i - 1, j - 1) != omega_entry(t, i, j) || omega_entry(t, i, j) != omega_entry(t, j, i)) return -1LL;
      }
    }
    return static_cast<long long>(t) * t;
  });

  if (t > enumeration_cap) {
    report.skip("tope-sweeps", "t exceeds the enumeration cap");
    return report.ok();
  }

  report.check("spectra", [&] {
    const auto inverse = inverse_rows(t);
    for (std::uint64_t mask = 0; mask < tope_count(t); ++mask) {
      const auto tope = Tope::from_mask(t, mask);
      const auto x = spectrum_fast(tope);
      if (!(spectrum_dense(tope, inverse) == x) || !(spectrum_intervals(tope) == x)) return -1LL;
      if (!(reconstruct(x) == tope) || !(decomposition_set(tope).vertex_sum() == tope.signs().cast<std::int64_t>()))
        return -1LL;
      if (x.support_size() % 2 != 1 || x.sum() != tope(t)) return -1LL;
      for (int e = 1; e <= t; ++e) {
        if (x(e) != 0 && x(e) != tope(e)) return -1LL;
      }
      if (!(spectrum_fast(-tope) == -x)) return -1LL;
      const auto negatives = negative_part(tope);
      if (negpart_size_from_spectrum(x) != static_cast<std::int64_t>(negatives.size())) return -1LL;
      if (!(spectrum_from_y_sum(negatives) == x)) return -1LL;
      if (!negatives.is_empty()) {
        const int rho = interval_partition(negatives).rho();
        const int expected = negatives.boundary_count() == 0 ? 2 * rho + 1 : 2 * rho - 1;
        if (x.support_size() != expected) return -1LL;
      }
    }
    return static_cast<long long>(tope_count(t));
  });

  report.check("counts", [&] {
    const auto formula = formula_statistics(t);
    const auto enumerated = enumerate_statistics(t, enumeration_cap);
    if (formula.rows != enumerated.rows) return -1LL;
    for (int l = 1; l <= t; l += 2) {
      if (enumerated.column_total(l) != count_topes_by_size(t, l)) return -1LL;
    }
    return static_cast<long long>(formula.rows.size());
  });

  report.check("class-refinement", [&] {
    long long rows = 0;
    for (const auto& row : enumerate_class_tallies(t, enumeration_cap)) {
      if (row.rho != runs_for_size(row.l, row.boundary)) return -1LL;
      if (structured_counts(t, row.l, row.boundary, row.j) != row.count) return -1LL;
      ++rows;
    }
    return rows;
  });

  if (t <= kPairSweepMax) {
    report.check("pairs", [&] {
      long long cases = 0;
      for (std::uint64_t a = 0; a < tope_count(t); ++a) {
        const auto first = Tope::from_mask(t, a);
        const auto x1 = spectrum_fast(first);
        for (std::uint64_t b = 0; b < tope_count(t); ++b) {
          const auto second = Tope::from_mask(t, b);
          const auto x2 = spectrum_fast(second);
          const auto diff = static_cast<std::int64_t>(x1.support_size()) - x2.support_size();
          if (size_difference(first, second) != diff) return -1LL;
          if ((eq31_indicator(first, second) == 0) != (diff == 0)) return -1LL;
          if (!(negpart_meet_join_from_spectra(x1, x2) == negpart_meet_join_cards(first, second))) return -1LL;
          const auto flips = GroundSubset::from_mask(t, b);
          if (!flips.is_full() && equal_size_criterion(first, flips).equal != (spectrum_fast(reorient(first, flips)).support_size() == x1.support_size()))
            return -1LL;
          if (a != 0 && b != 0) {
            const auto sa = GroundSubset::from_mask(t, a);
            const bool direct = spectrum_fast(reorient(Tope::positive(t), sa)).support_size() ==
                                spectrum_fast(reorient(Tope::positive(t), flips)).support_size();
            if (corollary_equal_size(sa, flips) != direct) return -1LL;
          }
          ++cases;
        }
      }
      return cases;
    });
  } else {
    report.skip("pairs", "t above " + std::to_string(kPairSweepMax));
  }

  if (t <= oracle_max && t <= kOracleCap) {
    report.check("oracle", [&] {
      const auto cycle = build_cycle(t);
      for (std::uint64_t mask = 0; mask < tope_count(t); ++mask) {
        const auto tope = Tope::from_mask(t, mask);
        const auto found = bruteforce_minimal_decomposition(tope, cycle);
        std::vector<int> expected;
        for (const auto& term : decomposition_set(tope).terms) expected.push_back(term.cycle_vertex(t));
        std::sort(expected.begin(), expected.end());
        if (!found.unique || found.minimal_set != expected) return -1LL;
      }
      return static_cast<long long>(tope_count(t));
    });
  } else {
    report.skip("oracle", "t above --oracle-max");
  }

  out << (report.ok() ? "all checks passed" : "some checks FAILED") << '\n';
  return report.ok();
}

}  // namespace cyclotope::cli
