#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hypermonad {

/** Worker cap: HYPERMONAD_THREADS when set, else the hardware count. */
inline unsigned thread_budget() {
  if (const char* env = std::getenv("HYPERMONAD_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return unsigned(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/**
 * Run fn(i) for i in [0, n). Each index is handled by exactly one worker,
 * so results are identical for every thread count as long as distinct
 * indices touch distinct state.
 */
template <typename Fn>
void parallel_for(std::uint64_t n, Fn&& fn) {
  unsigned workers = thread_budget();
  if (workers <= 1 || n < 2048) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (workers > n) workers = unsigned(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace hypermonad
