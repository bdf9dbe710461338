#pragma once

#include <cstddef>
#include <functional>

namespace burau {

/// Worker count: BURAU_THREADS if set and positive, else the hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Indices are
/// handed out dynamically; callers write results into slot i so output order never
/// depends on the schedule. The first exception thrown by a body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace burau
