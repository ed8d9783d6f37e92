#include <random>
#include <vector>

#include "doctest.h"

#include "cyclotope/decomposition.hpp"

using namespace cyclotope;

namespace {

Spectrum spectrum_of(std::initializer_list<int> coords) {
  SignVector c(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (int v : coords) c[i++] = static_cast<std::int8_t>(v);
  return Spectrum(std::move(c));
}

Tope random_tope(int t, std::mt19937_64& rng) {
  SignVector s(t);
  for (int i = 0; i < t; ++i) s[i] = (rng() & 1U) ? std::int8_t{1} : std::int8_t{-1};
  return Tope(std::move(s));
}

}  // namespace

TEST_CASE("spectrum_dense examples") {
  for (int t = 3; t <= 9; ++t) {
    const auto cycle = build_cycle(t);
    for (int s = 1; s <= t; ++s) CHECK(spectrum_dense(cycle.vertex(s - 1)) == Spectrum::unit(t, s));
    CHECK(spectrum_dense(Tope::negative(t)) == Spectrum::unit(t, 1, -1));
  }
  CHECK(spectrum_dense(Tope::parse("+--++")) == spectrum_of({1, -1, 0, 1, 0}));
}

TEST_CASE("spectrum_fast examples") {
  CHECK(spectrum_fast(Tope::positive(6)) == Spectrum::unit(6, 1));
  CHECK(spectrum_fast(Tope::parse("---")) == spectrum_of({-1, 0, 0}));
  const auto tope = Tope::parse("+--+");
  CHECK(spectrum_fast(tope) == spectrum_of({1, -1, 0, 1}));
  CHECK(spectrum_fast(tope) == spectrum_dense(tope));
}

TEST_CASE("spectrum_intervals examples") {
  // A = [1,2], t = 6: left-only, one run
  auto x = spectrum_intervals(Tope::parse("--++++"));
  CHECK(x == Spectrum::unit(6, 3));
  CHECK(x.support_size() == 1);

  // A = {1,3,4,6}: both ends, three runs
  const auto both = Tope::parse("-+--+-");
  x = spectrum_intervals(both);
  CHECK(x == spectrum_of({-1, 1, -1, 0, 1, -1}));
  CHECK(x == spectrum_dense(both));
  CHECK(x.support_size() == 5);

  // A = [4,5], t = 5: right-only
  CHECK(spectrum_intervals(Tope::parse("+++--")) == Spectrum::unit(5, 4, -1));
}

TEST_CASE("decomposition_set examples") {
  auto d = decomposition_set(Tope::positive(5));
  CHECK(d.terms == std::vector<Term>{{1, 0}});
  d = decomposition_set(Tope::negative(5));
  CHECK(d.terms == std::vector<Term>{{-1, 0}});

  const auto tope = Tope::parse("+--++");
  d = decomposition_set(tope);
  CHECK(d.terms == std::vector<Term>{{1, 0}, {-1, 1}, {1, 3}});
  CHECK(d.size() == 3);
  // (1,1,1,1,1) - (-1,1,1,1,1) + (-1,-1,-1,1,1)
  IntRow<> expected(5);
  expected << 1, -1, -1, 1, 1;
  CHECK(d.vertex_sum() == expected);
}

TEST_CASE("spectrum_update examples") {
  const auto tope = Tope::parse("+-+-+");
  const auto x = spectrum_fast(tope);
  CHECK(spectrum_update(x, tope, GroundSubset::empty(5)) == x);

  // Starting from T(+) with S = T- reproduces x(T) = sigma(1) - 2 (sum sigma(s)) M^{-1}.
  const auto target = Tope::parse("-++--");
  CHECK(spectrum_update(Spectrum::unit(5, 1), Tope::positive(5), negative_part(target)) == spectrum_dense(target));

  CHECK(spectrum_update(Spectrum::unit(4, 1), Tope::positive(4), GroundSubset(4, {2})) == spectrum_of({1, -1, 1, 0}));
  CHECK_THROWS_AS(spectrum_update(x, tope, GroundSubset::empty(6)), Error);
}

TEST_CASE("y_vector examples") {
  CHECK(y_vector(1, 4) == spectrum_of({0, 1, 0, 0}));
  CHECK(y_vector(3, 5) == spectrum_of({1, 0, -1, 1, 0}));
  CHECK(y_vector(4, 4) == spectrum_of({0, 0, 0, -1}));
  CHECK_THROWS_AS(y_vector(0, 4), Error);
  CHECK_THROWS_AS(y_vector(5, 4), Error);
  for (int t = 3; t <= 10; ++t) {
    for (int s = 1; s <= t; ++s) CHECK(y_vector(s, t) == spectrum_dense(reorient(Tope::positive(t), GroundSubset(t, {s}))));
  }
}

TEST_CASE("spectrum_from_y_sum examples") {
  CHECK(spectrum_from_y_sum(GroundSubset::empty(5)) == Spectrum::unit(5, 1));
  CHECK(spectrum_from_y_sum(GroundSubset(5, {3})) == y_vector(3, 5));
  const auto x = spectrum_from_y_sum(GroundSubset(4, {1, 4}));
  CHECK(x == spectrum_of({-1, 1, 0, -1}));
  CHECK(x == spectrum_dense(Tope::parse("-++-")));
}

TEST_CASE("size_difference examples") {
  const auto tope = Tope::parse("+-++-");
  CHECK(size_difference(tope, tope) == 0);
  CHECK(size_difference(Tope::positive(3), Tope::parse("+-+")) == -2);
  CHECK(spectrum_dense(Tope::parse("+-+")) == spectrum_of({1, -1, 1}));
  CHECK(size_difference(Tope::positive(6), Tope::negative(6)) == 0);
}

TEST_CASE("negative-part statistics from spectra") {
  CHECK(negpart_size_from_spectrum(Spectrum::unit(5, 1)) == 0);
  CHECK(negpart_size_from_spectrum(Spectrum::unit(5, 1, -1)) == 5);
  const auto neg = Spectrum::unit(4, 1, -1);
  CHECK(negpart_meet_join_from_spectra(neg, neg) == MeetJoin{4, 4});
  CHECK_THROWS_AS(negpart_size_from_spectrum(spectrum_of({1, 1, 1})), Error);
  CHECK_THROWS_AS(negpart_meet_join_from_spectra(spectrum_of({0, 0, 0}), neg), Error);
}

TEST_CASE("three spectrum routes agree on every tope, t in [3,12]") {
  for (int t = 3; t <= 12; ++t) {
    const auto inverse = inverse_rows(t);
    for (std::uint64_t m = 0; m < (1U << t); ++m) {
      const auto tope = Tope::from_mask(t, m);
      const auto fast = spectrum_fast(tope);
      REQUIRE(spectrum_dense(tope, inverse) == fast);
      REQUIRE(spectrum_intervals(tope) == fast);
    }
  }
}

TEST_CASE("structural laws of spectra, every tope t <= 12") {
  for (int t = 3; t <= 12; ++t) {
    const auto m_matrix = cycle_matrix(t);
    for (std::uint64_t m = 0; m < (1U << t); ++m) {
      const auto tope = Tope::from_mask(t, m);
      const auto x = spectrum_fast(tope);
      const IntRow<> product = x.coords().cast<std::int64_t>() * m_matrix.numer;
      REQUIRE(product == tope.signs().cast<std::int64_t>());
      REQUIRE(synthesize(x) == product);
      REQUIRE(product.squaredNorm() == t);
      REQUIRE(x.support_size() % 2 == 1);
      REQUIRE(x.sum() == tope(t));
      for (int e = 1; e <= t; ++e) {
        if (x(e) != 0) REQUIRE(x(e) == tope(e));
      }
      REQUIRE(spectrum_fast(-tope) == -x);
      REQUIRE(decomposition_set(tope).vertex_sum() == tope.signs().cast<std::int64_t>());

      const auto negatives = negative_part(tope);
      if (!negatives.is_empty()) {
        const int rho = interval_partition(negatives).rho();
        const int expected = negatives.boundary_count() == 0 ? 2 * rho + 1 : 2 * rho - 1;
        REQUIRE(x.support_size() == expected);
      }
    }
  }
}

TEST_CASE("y-sum and antipodal complement identities, all A, t <= 10") {
  for (int t = 3; t <= 10; ++t) {
    for (std::uint64_t m = 0; m < (1U << t); ++m) {
      const auto a = GroundSubset::from_mask(t, m);
      const auto x = spectrum_dense(reorient(Tope::positive(t), a));
      REQUIRE(spectrum_from_y_sum(a) == x);
      REQUIRE(spectrum_dense(reorient(Tope::positive(t), a.complement())) == -x);
    }
  }
}

TEST_CASE("spectrum_update along random single-flip paths, t <= 64") {
  std::mt19937_64 rng(5);
  for (int t = 3; t <= 64; ++t) {
    auto tope = random_tope(t, rng);
    auto x = spectrum_fast(tope);
    for (int step = 0; step < 50; ++step) {
      const int e = 1 + static_cast<int>(rng() % static_cast<unsigned>(t));
      const GroundSubset flip(t, {e});
      x = spectrum_update(x, tope, flip);
      tope = reorient(tope, flip);
      REQUIRE(x == spectrum_fast(tope));
    }
    // multi-element separation sets
    for (int step = 0; step < 20; ++step) {
      const auto other = random_tope(t, rng);
      REQUIRE(spectrum_update(x, tope, separation_set(tope, other)) == spectrum_fast(other));
    }
  }
}

TEST_CASE("size_difference equals the direct difference, all pairs t <= 8") {
  for (int t = 3; t <= 8; ++t) {
    for (std::uint64_t a = 0; a < (1U << t); ++a) {
      const auto first = Tope::from_mask(t, a);
      const int size_a = spectrum_fast(first).support_size();
      for (std::uint64_t b = 0; b < (1U << t); ++b) {
        const auto second = Tope::from_mask(t, b);
        REQUIRE(size_difference(first, second) == size_a - spectrum_fast(second).support_size());
      }
    }
  }
}

TEST_CASE("large dimensions: routes agree on random topes") {
  std::mt19937_64 rng(11);
  SUBCASE("t = 1000, 10^4 topes, dense in int32") {
    const auto inverse = inverse_rows<std::int32_t>(1000);
    for (int r = 0; r < 10000; ++r) {
      const auto tope = random_tope(1000, rng);
      const auto fast = spectrum_fast(tope);
      REQUIRE(spectrum_intervals(tope) == fast);
      REQUIRE(spectrum_dense(tope, inverse) == fast);
    }
  }
  SUBCASE("t = 10000, fast vs intervals on 10^4 topes, dense in int8 on a sample") {
    for (int r = 0; r < 10000; ++r) {
      const auto tope = random_tope(10000, rng);
      REQUIRE(spectrum_intervals(tope) == spectrum_fast(tope));
    }
    const auto inverse = inverse_rows<std::int8_t>(10000);
    for (int r = 0; r < 8; ++r) {
      const auto tope = random_tope(10000, rng);
      REQUIRE(spectrum_dense(tope, inverse) == spectrum_fast(tope));
    }
  }
}

TEST_CASE("inconsistent spectrum/tope pairs are internal errors") {
  const auto tope = Tope::positive(4);
  // x(T(+)) is sigma(1); pretending it is sigma(2) drives a coordinate out of range
  CHECK_THROWS_AS(spectrum_update(Spectrum::unit(4, 2, -1), tope, GroundSubset(4, {1, 4})), InternalError);
  CHECK_THROWS_AS(reconstruct(spectrum_of({1, 1, 0})), Error);
}
