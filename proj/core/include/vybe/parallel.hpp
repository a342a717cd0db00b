#pragma once

#include <cstddef>
#include <functional>

namespace vybe {

/// Worker count: VYBE_THREADS when set (clamped to >= 1), else the hardware
/// concurrency.
int thread_budget();

/// Runs fn(0..n-1), fanning out across the thread budget. Work items must be
/// independent; callers keep determinism by writing results into slot i only.
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace vybe
