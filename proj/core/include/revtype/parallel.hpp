#pragma once

#include <cstddef>
#include <functional>

namespace revtype {

/// Worker count: hardware concurrency, capped by the REVTYPE_THREADS
/// environment variable when it holds a positive integer.
int worker_count();

/// Runs body(i) for i in [0, n) over contiguous static chunks. The partition
/// depends only on n and worker_count(), and body must write only to slot i,
/// so results are independent of scheduling. The first exception thrown by
/// any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace revtype
