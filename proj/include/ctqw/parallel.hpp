#pragma once

#include <cstddef>
#include <functional>

namespace ctqw {

/// Worker count: CTQW_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs fn(i) for i in [0, n) across thread_count() workers. Iterations must
/// write to disjoint outputs. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ctqw
