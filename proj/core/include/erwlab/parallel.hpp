#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace erwlab {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(begin, end) over [0, count) split into fixed-size chunks that
/// workers claim from an atomic counter. The chunking does not depend on
/// the thread count, so index-addressed output is identical for any
/// parallelism degree. Exceptions from workers are rethrown.
inline void parallel_chunks(
    std::int64_t count, int threads,
    const std::function<void(std::int64_t, std::int64_t)>& body,
    std::int64_t chunk = 64) {
  if (count <= 0) return;
  const int workers = resolve_threads(threads);
  if (workers == 1 || count <= chunk) {
    body(0, count);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;  // first failure wins via compare-exchange
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::int64_t begin = next.fetch_add(chunk);
        if (begin >= count || failed.load()) return;
        const std::int64_t end = begin + chunk < count ? begin + chunk : count;
        try {
          body(begin, end);
        } catch (...) {
          bool expected = false;
          if (failed.compare_exchange_strong(expected, true))
            error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace erwlab
