#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace recross {

// Runs fn(0..jobs-1) on up to `threads` workers.  Callers must write
// results into per-index slots; merge order is then schedule-independent.
inline void parallel_for(int jobs, int threads, const std::function<void(int)>& fn) {
  if (threads > jobs) threads = jobs;
  if (threads <= 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) fn(i);
    });
  for (std::thread& th : pool) th.join();
}

}  // namespace recross
