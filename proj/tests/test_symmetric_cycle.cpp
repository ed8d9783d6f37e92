#include <vector>

#include "doctest.h"

#include "cyclotope/symmetric_cycle.hpp"

using namespace cyclotope;

TEST_CASE("build_cycle t=3 lists the six vertices in order") {
  const auto cycle = build_cycle(3);
  const std::vector<std::string> expected{"+++", "-++", "--+", "---", "+--", "++-"};
  REQUIRE(cycle.vertices().size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(cycle.vertex(static_cast<int>(k)).to_string() == expected[k]);
  CHECK(separation_set(cycle.vertex(2), cycle.vertex(3)).size() == 1);
}

TEST_CASE("build_cycle t=4 antipodal vertex") {
  const auto cycle = build_cycle(4);
  CHECK(cycle.vertex(5) == -cycle.vertex(1));
  CHECK(cycle.vertex(5).to_string() == "+---");
  CHECK_THROWS_AS(build_cycle(2), Error);
  CHECK_THROWS_AS(cycle.vertex(8), Error);
}

TEST_CASE("inverse_rows examples") {
  const auto inv3 = inverse_rows(3);
  CHECK(inv3.denom == 2);
  Eigen::Matrix<std::int64_t, 3, 3> expected;
  expected << 1, -1, 0, 0, 1, -1, 1, 0, 1;
  CHECK(inv3.numer == expected);

  const auto inv4 = inverse_rows(4);
  Eigen::Matrix<std::int64_t, 1, 4> last;
  last << 1, 0, 0, 1;
  CHECK(inv4.numer.row(3) == last);
}

TEST_CASE("gram_entry examples") {
  CHECK(gram_entry(5, 2, 2) == 5);
  CHECK(gram_entry(5, 1, 3) == 1);
  const auto cycle = build_cycle(4);
  CHECK(gram_entry(4, 1, 4) == inner(cycle.vertex(0), cycle.vertex(3)));
  CHECK(gram_entry(4, 1, 4) == -2);
  CHECK_THROWS_AS(gram_entry(4, 0, 1), Error);
  CHECK_THROWS_AS(gram_entry(4, 1, 5), Error);
}

TEST_CASE("omega_entry examples") {
  CHECK(omega_entry(5, 3, 3) == 2);
  CHECK(omega_entry(5, 1, 5) == 1);
  CHECK(omega_entry(5, 1, 3) == 0);
  CHECK(omega_entry(5, 2, 3) == -1);
  CHECK(omega_entry(5, 3, 2) == -1);
  CHECK(omega_entry(5, 4, 5) == -1);
  CHECK_THROWS_AS(omega_entry(5, 6, 1), Error);
}

TEST_CASE("M * 2M^{-1} = 2M^{-1} * M = 2I for t in [3,64]") {
  for (int t = 3; t <= 64; ++t) {
    const auto m = cycle_matrix(t);
    const auto inv = inverse_rows(t);
    const ScaledMatrix<>::Numerator two_i = 2 * ScaledMatrix<>::Numerator::Identity(t, t);
    REQUIRE(m.numer * inv.numer == two_i);
    REQUIRE(inv.numer * m.numer == two_i);
  }
}

TEST_CASE("gram entries equal direct inner products of cycle rows, t <= 16") {
  for (int t = 3; t <= 16; ++t) {
    const auto cycle = build_cycle(t);
    const auto gram = gram_matrix(t);
    for (int i = 1; i <= t; ++i) {
      for (int j = 1; j <= t; ++j) {
        REQUIRE(gram_entry(t, i, j) == inner(cycle.vertex(i - 1), cycle.vertex(j - 1)));
        REQUIRE(gram(i - 1, j - 1) == gram_entry(t, i, j));
      }
    }
  }
}

TEST_CASE("omega matrix equals (2M^{-1})(2M^{-1})^T, is symmetric, and has the expected pattern, t <= 16") {
  for (int t = 3; t <= 16; ++t) {
    const auto inv = inverse_rows(t);
    const ScaledMatrix<>::Numerator product = inv.numer * inv.numer.transpose();
    const auto omega = omega_matrix(t);
    REQUIRE(omega.denom == 4);
    REQUIRE(omega.numer == product);
    REQUIRE(omega.numer == omega.numer.transpose());
    for (int i = 1; i <= t; ++i) {
      for (int j = 1; j <= t; ++j) {
        const auto w = omega_entry(t, i, j);
        REQUIRE(w == product(i - 1, j - 1));
        std::int64_t expected = 0;
        if (i == j) expected = 2;
        else if (std::abs(i - j) == 1) expected = -1;
        else if ((i == 1 && j == t) || (i == t && j == 1)) expected = 1;
        REQUIRE(w == expected);
      }
    }
  }
}

TEST_CASE("cycle property: consecutive vertices differ in one coordinate, all distinct, t <= 16") {
  for (int t = 3; t <= 16; ++t) {
    const auto cycle = build_cycle(t);
    CHECK(cycle.vertex(0) == Tope::positive(t));
    for (int k = 0; k < 2 * t; ++k) {
      REQUIRE(separation_set(cycle.vertex(k), cycle.vertex((k + 1) % (2 * t))).size() == 1);
      for (int m = k + 1; m < 2 * t; ++m) REQUIRE_FALSE(cycle.vertex(k) == cycle.vertex(m));
    }
    for (int s = 1; s < t; ++s) {
      std::vector<int> prefix;
      for (int e = 1; e <= s; ++e) prefix.push_back(e);
      REQUIRE(cycle.vertex(s) == reorient(cycle.vertex(0), GroundSubset(t, prefix)));
    }
    for (int k = 0; k < t; ++k) REQUIRE(cycle.vertex(k + t) == -cycle.vertex(k));
  }
}
