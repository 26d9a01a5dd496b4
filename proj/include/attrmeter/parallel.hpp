#pragma once

#include <cstddef>
#include <functional>

namespace attrmeter {

/// Worker count used by parallel_for: the ATTRMETER_THREADS environment
/// variable when set, otherwise the hardware concurrency.
std::size_t worker_count();

/// Runs fn(0) .. fn(n-1) on a small thread pool. Each index is executed
/// exactly once and may write only to its own output slot, so results do not
/// depend on the schedule. Nested calls run serially on the calling thread.
/// The first exception thrown by any job is rethrown to the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace attrmeter
