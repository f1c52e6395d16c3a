#pragma once

#include <cstddef>
#include <functional>

namespace hypermin::threads {

/// Worker cap: min(hardware threads, HYPERMIN_THREADS when set).
int thread_count();

/// Static block partition of [0, n) over the worker cap; results must be
/// written to disjoint slots so runs stay deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hypermin::threads
