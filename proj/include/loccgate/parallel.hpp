#pragma once

#include <cstddef>
#include <functional>

namespace loccgate {

/// Worker count: LOCCGATE_THREADS if set (clamped to >= 1), otherwise the
/// hardware concurrency.
int thread_cap();

/// Runs fn(0..n-1) with static chunking over at most thread_cap() threads.
/// Every index is computed independently, so results are identical for any
/// thread count; callers write into per-index slots and reduce afterwards.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace loccgate
