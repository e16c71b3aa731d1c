#pragma once

#include <cstddef>
#include <functional>

namespace beurling {

/// Worker count: BEURLING_THREADS when set and positive, otherwise the
/// hardware concurrency (0 means auto).
unsigned thread_count();

/// Overrides the worker count for the process; 0 restores the default.
void set_thread_count(unsigned n);

/// Runs body(i) for i in [0, count) across the worker pool. Each index is
/// processed by exactly one thread, so results written per index are
/// independent of the split.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace beurling
