#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace grpx {

/// Worker count from GRPX_THREADS, else hardware concurrency (at least 1).
unsigned thread_count();

/// Runs fn(begin_i, end_i) over contiguous chunks of [begin, end). Chunks are
/// disjoint, so callers writing to per-index slots need no synchronization.
template <class F>
void parallel_chunks(std::size_t begin, std::size_t end, F&& fn, std::size_t min_chunk = 64) {
  const std::size_t total = end > begin ? end - begin : 0;
  unsigned workers = thread_count();
  if (total < 2 * min_chunk || workers <= 1) {
    if (total) fn(begin, end);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total / min_chunk));
  const std::size_t step = (total + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = begin + w * step;
    const std::size_t hi = std::min(end, lo + step);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace grpx
