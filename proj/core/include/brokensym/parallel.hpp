#pragma once

#include <cstddef>
#include <functional>

namespace bsym {

// Worker cap: min(BROKENSYM_THREADS, hardware_concurrency), at least 1.
std::size_t worker_count();

// Runs fn(0..n-1) on up to worker_count() threads. Callers own determinism:
// each index writes only its own slot, results are assembled by index.
// Exceptions are captured and rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace bsym
