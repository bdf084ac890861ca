#pragma once

#include <cstddef>
#include <functional>

namespace symwalk {

/// Worker count: SYMWALK_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, count) across worker_count() threads. Exceptions
/// thrown by body are rethrown on the calling thread (the first one wins).
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace symwalk
