#include <map>
#include <stdexcept>

#include "doctest.h"

#include "cyclotope/decomposition.hpp"
#include "cyclotope/parallel.hpp"

using namespace cyclotope;

namespace {

using Histogram = std::map<int, std::uint64_t>;

Histogram size_histogram(int t, int workers) {
  return parallel_tally(
      std::uint64_t{1} << t, Histogram{},
      [t](std::uint64_t begin, std::uint64_t end, Histogram& h) {
        for (std::uint64_t m = begin; m < end; ++m) ++h[spectrum_fast(Tope::from_mask(t, m)).support_size()];
      },
      [](Histogram& into, const Histogram& from) {
        for (const auto& [k, v] : from) into[k] += v;
      },
      workers);
}

}  // namespace

TEST_CASE("tallies do not depend on the worker count") {
  const auto serial = size_histogram(14, 1);
  std::uint64_t total = 0;
  for (const auto& [size, n] : serial) total += n;
  CHECK(total == (std::uint64_t{1} << 14));
  for (int workers : {2, 3, 5, 8}) CHECK(size_histogram(14, workers) == serial);
}

TEST_CASE("every index is visited exactly once") {
  for (int workers : {1, 2, 7}) {
    const auto sum = parallel_tally(
        std::uint64_t{100003}, std::uint64_t{0},
        [](std::uint64_t begin, std::uint64_t end, std::uint64_t& acc) {
          for (std::uint64_t i = begin; i < end; ++i) acc += i;
        },
        [](std::uint64_t& into, std::uint64_t from) { into += from; }, workers);
    CHECK(sum == std::uint64_t{100003} * 100002 / 2);
  }
}

TEST_CASE("exceptions from workers reach the caller") {
  auto failing = [](int workers) {
    return parallel_tally(
        std::uint64_t{10000}, 0,
        [](std::uint64_t begin, std::uint64_t end, int&) {
          if (begin <= 9000 && 9000 < end) throw std::runtime_error("boom");
        },
        [](int&, int) {}, workers);
  };
  CHECK_THROWS_AS(failing(1), std::runtime_error);
  CHECK_THROWS_AS(failing(4), std::runtime_error);
}

TEST_CASE("worker_count is at least one") { CHECK(worker_count() >= 1); }
