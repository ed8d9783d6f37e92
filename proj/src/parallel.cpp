#include "cyclotope/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cyclotope {

int worker_count() {
  int workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("CYCLOTOPE_THREADS")) {
    try {
      const int requested = std::stoi(cap);
      if (requested >= 1) workers = std::min(workers, requested);
    } catch (const std::exception&) {
      // unparsable cap: keep the hardware default
    }
  }
  return workers;
}

}  // namespace cyclotope
