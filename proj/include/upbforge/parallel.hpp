#pragma once

#include <cstddef>
#include <functional>

namespace upbforge {

/// Worker count for parallel sweeps: UPBFORGE_THREADS if set to a positive
/// integer, else std::thread::hardware_concurrency() (at least 1).
std::size_t worker_count();

/// Runs fn(0..n-1) on up to worker_count() threads. Items must be
/// independent; the first exception thrown by any item is rethrown.
/// Calls made from inside a worker run sequentially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace upbforge
