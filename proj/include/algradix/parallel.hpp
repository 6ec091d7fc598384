#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace algradix {

/// Worker count from ALGRADIX_THREADS, defaulting to 1.
inline int default_threads() {
  if (const char* env = std::getenv("ALGRADIX_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

/// Runs body(chunk, begin, end) over `threads` contiguous chunks of [0, n).
/// Callers merge per-chunk results in chunk order, which keeps the output
/// independent of scheduling.
inline void parallel_chunks(std::size_t n, int threads,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(threads), n));
  if (t <= 1) {
    body(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex mu;
  const std::size_t step = (n + t - 1) / t;
  for (std::size_t c = 0; c < t; ++c) {
    const std::size_t begin = c * step;
    const std::size_t end = std::min(n, begin + step);
    pool.emplace_back([&, c, begin, end] {
      try {
        body(c, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline std::size_t chunk_count(std::size_t n, int threads) {
  return std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(threads), n));
}

}  // namespace algradix
