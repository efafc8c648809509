#pragma once

#include <atomic>
#include <cstddef>

namespace hmat::par {

// Smallest index in [0, count) where pred holds, or count when none.
// Indices already above the current best are skipped; every index below the
// final result is evaluated, so the reduction is exact.
template <class Pred>
std::size_t first_hit(std::size_t count, Pred&& pred) {
  std::atomic<std::size_t> best{count};
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    if (pred(idx)) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  return best.load();
}

template <class Pred>
std::size_t first_hit_serial(std::size_t count, Pred&& pred) {
  for (std::size_t i = 0; i < count; ++i)
    if (pred(i)) return i;
  return count;
}

}  // namespace hmat::par
