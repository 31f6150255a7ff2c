// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace impact {

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t worker_count =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(worker_count);
  for (std::size_t w = 0; w < worker_count; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace impact
