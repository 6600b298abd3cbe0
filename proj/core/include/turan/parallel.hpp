#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace turan {

// Worker count for data-parallel loops. TURAN_THREADS overrides; the default
// is the hardware count (which is 1 in the usual sandbox, so loops typically
// degrade to plain sequential execution with no thread spawn).
inline unsigned thread_count() {
  if (const char* env = std::getenv("TURAN_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Run fn(i) for i in [0, n). Work is split into contiguous blocks, one per
// worker, so results that are written to preallocated slots stay ordered and
// the schedule is deterministic. fn must not throw across threads; callers
// that can fail store a status per index instead.
inline void parallel_for(std::size_t n,
                         const std::function<void(std::size_t)>& fn) {
  unsigned workers = thread_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = static_cast<std::size_t>(w) * chunk;
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace turan
