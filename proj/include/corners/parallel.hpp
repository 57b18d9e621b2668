#ifndef CORNERS_PARALLEL_HPP
#define CORNERS_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace corners {

/// Worker count for data-parallel helpers: CORNERS_THREADS when set to a
/// positive integer, otherwise the hardware concurrency (at least 1).
int thread_budget();

/// Runs fn(0), ..., fn(count - 1) across the thread budget. Each index is
/// handed to exactly one worker, so writes to per-index slots need no
/// locking and results cannot depend on scheduling. The first exception
/// thrown by fn is rethrown on the calling thread.
void parallel_for_index(std::int64_t count, const std::function<void(std::int64_t)>& fn);

}  // namespace corners

#endif
