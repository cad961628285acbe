#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace conics {

template <typename Fn>
std::int64_t parallel_sum(unsigned workers, std::int64_t n, Fn fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2) {
    std::int64_t total = 0;
    for (std::int64_t i = 0; i < n; ++i) total += fn(i);
    return total;
  }
  std::vector<std::int64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::int64_t acc = 0;
      for (std::int64_t i = w; i < n; i += workers) acc += fn(i);
      partial[w] = acc;
    });
  }
  for (auto& t : pool) t.join();
  std::int64_t total = 0;
  for (const auto x : partial) total += x;
  return total;
}

}  // namespace conics
