#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace monet {

/// Runs fn(i) for i in [0, n) across `jobs` threads. Work is split into
/// contiguous chunks so results indexed by i merge deterministically no
/// matter the worker count.
inline void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned t = std::min<size_t>(jobs, n);
  std::vector<std::thread> pool;
  pool.reserve(t);
  size_t chunk = (n + t - 1) / t;
  for (unsigned k = 0; k < t; ++k) {
    size_t lo = k * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace monet
