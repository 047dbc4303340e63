#pragma once

#include <cstddef>
#include <functional>

namespace compcent {

/// Number of worker threads used by parallel loops. Defaults to the
/// COMPCENT_THREADS environment variable, else hardware concurrency.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Runs body(i) for i in [0, n). Each index must only write to its own
/// output slot; callers reduce afterwards in index order, so results do not
/// depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace compcent
