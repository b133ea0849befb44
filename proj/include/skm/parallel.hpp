#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>

namespace skm {

/// Execution strategy for the exhaustive kernels. Serial is the reference
/// implementation; Parallel must return identical results.
enum class Exec { Serial, Parallel };

/// Lowest index i in [0, count) with `holds(i) == false`, or `count` when every
/// index holds. `holds` must be safe to call concurrently. Exceptions thrown by
/// `holds` are rethrown on the calling thread (the lowest-index one when several
/// are raised in parallel mode is not guaranteed).
template <typename Pred>
std::uint64_t first_failure(std::uint64_t count, Exec exec, Pred&& holds) {
  if (exec == Exec::Serial) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (!holds(i)) return i;
    return count;
  }

  std::atomic<std::uint64_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto n = static_cast<std::int64_t>(count);

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t s = 0; s < n; ++s) {
    const auto i = static_cast<std::uint64_t>(s);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (!holds(i)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0, std::memory_order_relaxed);
    }
  }

  if (error) std::rethrow_exception(error);
  return best.load();
}

}  // namespace skm
