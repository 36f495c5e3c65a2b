#pragma once

#include <cstddef>
#include <functional>

namespace trapcorr {

/// Worker count: TRAPCORR_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency().
[[nodiscard]] std::size_t thread_count();

/// Calls body(i) for i in [0, n) across thread_count() workers. Each index
/// is visited exactly once; results must be written to per-index slots.
/// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace trapcorr
