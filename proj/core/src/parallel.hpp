#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace casimir::detail {

// Runs fn(i) for i in [0, n) with a static interleaved split. Each index
// writes its own slot, so results never depend on scheduling.
template <class Fn>
void parallel_for(int n, int threads, Fn fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(n, 1));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errs(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < n; i += threads) fn(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

// Fixed-topology pairwise sum.
inline double pairwise_sum(const double* v, size_t n) {
  if (n == 0) return 0.0;
  if (n == 1) return v[0];
  const size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(v.data(), v.size());
}

}  // namespace casimir::detail
