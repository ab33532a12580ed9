#pragma once

#include <cstddef>
#include <functional>

namespace atomfiber {

// Runs fn(0..n-1), fanning out over up to `threads` std::threads. Work items
// must be independent; the first exception thrown by any worker is rethrown
// on the caller after all workers join.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace atomfiber
