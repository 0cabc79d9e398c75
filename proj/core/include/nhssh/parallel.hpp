#pragma once

#include <cstddef>
#include <functional>

namespace nhssh {

// Worker count resolution: a positive `requested` wins, then the
// NHSSH_WORKERS environment variable, then the hardware concurrency.
// Always at least 1.
int default_workers(int requested = 0);

// Runs fn(i) for every i in [0, n), spread across `workers` threads
// (resolved as above).  fn must be safe to call concurrently and should
// write its result into slot i of a preallocated container, which keeps
// assembly deterministic regardless of scheduling.  The first exception
// thrown by any invocation is rethrown on the calling thread after all
// workers have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int workers = 0);

}  // namespace nhssh
