#pragma once

#include <functional>

namespace rvnorm {

/// Worker cap: RVNORM_THREADS if set (>= 1), else hardware concurrency.
int max_threads();

/// Runs fn(i) for i in [0, count) on up to max_threads() workers. Each index
/// is handed out exactly once; callers reduce their per-index results in index
/// order afterwards, so the outcome is byte-identical for any thread count.
/// Nested calls run serially on the calling thread.
void parallel_for(int count, const std::function<void(int)>& fn);

} // namespace rvnorm
