#pragma once

#include <cstddef>
#include <functional>

namespace mfpce {

// Number of worker threads to use when the caller passes 0: the
// MFPCE_THREADS environment variable if set, hardware concurrency otherwise.
unsigned default_thread_count();

// Runs fn(i) for i in [0, n). Work items must be independent; any exception
// thrown by a worker is rethrown on the calling thread after all workers
// join. With n_threads == 1 (or n == 1) everything runs inline.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned n_threads = 0);

}  // namespace mfpce
