#ifndef HHNET_PARALLEL_HPP
#define HHNET_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace hhnet {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

// Run body(i) for every i in [0, n).  Each index is processed exactly once;
// callers keep determinism by writing only to slot i.
inline void parallel_for(int n, int threads, const std::function<void(int)> &body) {
  threads = std::min(resolve_threads(threads), n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        body(i);
      }
    });
  }
  for (auto &th : pool) th.join();
}

}  // namespace hhnet

#endif
