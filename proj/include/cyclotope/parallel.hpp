#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace cyclotope {

/// Hardware concurrency, capped by the CYCLOTOPE_THREADS environment variable.
int worker_count();

/**
 * Splits [0, n) into contiguous blocks, runs body(begin, end, tally) on each
 * block with its own copy of init, then folds the block tallies in block order
 * with merge(into, from). Result is independent of the worker count whenever
 * merge is associative.
 */
template <typename Tally, typename Body, typename Merge>
Tally parallel_tally(std::uint64_t n, const Tally& init, Body body, Merge merge, int worker_limit) {
  const auto workers = static_cast<std::uint64_t>(worker_limit < 1 ? 1 : worker_limit);
  if (workers <= 1 || n < 4096) {
    Tally out = init;
    body(std::uint64_t{0}, n, out);
    return out;
  }
  std::vector<Tally> partial(workers, init);
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(begin, end, partial[w]);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  Tally out = init;
  for (auto& p : partial) merge(out, p);
  return out;
}

template <typename Tally, typename Body, typename Merge>
Tally parallel_tally(std::uint64_t n, const Tally& init, Body body, Merge merge) {
  return parallel_tally(n, init, std::move(body), std::move(merge), worker_count());
}

}  // namespace cyclotope
