#pragma once

#include <cstddef>
#include <functional>

namespace fglab {

/// Worker count: FGLAB_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Runs body(i) for i in [0, n). Work is split into contiguous blocks, one
/// per worker; callers write results into per-index slots so the combined
/// output does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fglab
