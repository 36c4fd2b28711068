#pragma once

#include <cstddef>
#include <functional>

namespace pareto_smooth {

/// Worker count: PARETO_SMOOTH_THREADS if set (>= 1), else the hardware
/// concurrency, never more than `tasks`.
std::size_t worker_count(std::size_t tasks);

/// Runs body(k) for k in [0, count) on a small pool. Results must be written
/// to per-index slots; the first exception thrown by any task is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);
/// Same with an explicit pool size.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, std::size_t workers);

}  // namespace pareto_smooth
