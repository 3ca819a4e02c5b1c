#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace frackansa {

// Worker count for row-parallel assembly: FRAC_KANSA_THREADS caps it,
// 0 or unset means hardware concurrency.
inline unsigned assembly_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("FRAC_KANSA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v) < hw ? static_cast<unsigned>(v) : hw;
  }
  return hw;
}

// Static block split of [0, n); each index is visited exactly once and rows
// never share accumulators, so results are independent of the thread count.
template <typename F>
void parallel_rows(std::size_t n, F&& body) {
  unsigned workers = assembly_threads();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace frackansa
