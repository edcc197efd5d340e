#pragma once

#include <cstddef>
#include <functional>

namespace oddleech {

/// Worker count: NUM_WORKERS if set to a positive integer, else hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs task(i) for i in [0, count) on up to worker_count() threads. Tasks must write to
/// disjoint state; the first exception thrown by any task is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace oddleech
