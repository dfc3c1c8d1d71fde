#pragma once

#include <cstddef>
#include <functional>

namespace budgeted {

// Worker count from BUDGETED_THREADS, else hardware concurrency (min 1).
int default_thread_count();

// Calls fn(t) for t in [0, count) on up to `threads` workers (0 = default).
// Work items are handed out dynamically; fn must only write to its own slot.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace budgeted
