#pragma once

#include <functional>

namespace hypwalk {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Work is split
/// into contiguous blocks; callers write results into per-index slots, so
/// output never depends on the worker count. Exceptions are rethrown on the
/// calling thread.
void parallel_for(long count, int threads, const std::function<void(long)>& fn);

/// --threads flag if set (> 0), else HYPWALK_THREADS, else hardware
/// concurrency.
int resolve_threads(int requested);

}  // namespace hypwalk
