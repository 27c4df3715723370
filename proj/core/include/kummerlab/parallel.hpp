#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kummerlab {

/// Runs body(block) for every block in [0, n_blocks) on up to `workers`
/// threads. Blocks are handed out in ascending order. The first exception
/// thrown by any block is rethrown on the calling thread.
template <typename Body>
void parallel_blocks(std::size_t n_blocks, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || n_blocks <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) body(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      try {
        body(b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n_blocks);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(
      std::min<std::size_t>(workers, n_blocks));
  pool.reserve(n);
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// Default worker count: KUMMERLAB_WORKERS if set, else 1.
unsigned default_workers();

}  // namespace kummerlab
