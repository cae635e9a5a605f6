#pragma once

#include <functional>

namespace evscan {

/// Runs fn(index) for index in [0, count) on up to `threads` worker threads
/// (0 = hardware concurrency). Each index owns its output slot, so the result
/// of a slot-writing loop is independent of the schedule. If workers throw,
/// the exception from the smallest failing index is rethrown.
void parallel_for_index(long count, int threads, const std::function<void(long)>& fn);

}  // namespace evscan
