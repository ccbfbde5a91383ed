#pragma once

#include <cstddef>
#include <functional>

namespace gsw {

/// Worker cap: explicit set_max_threads() wins, else GSW_THREADS, else
/// hardware concurrency.  Always at least 1.
int max_threads();
void set_max_threads(int n);

/// Runs fn(i) for i in [0, n).  Iterations must be independent; the work is
/// chunked contiguously so outputs are identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace gsw
