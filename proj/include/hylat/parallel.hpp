#ifndef HYLAT_PARALLEL_HPP
#define HYLAT_PARALLEL_HPP

#include <functional>

namespace hylat {

/// Worker cap for parallel_for: set_max_threads wins, then the HYLAT_THREADS
/// environment variable, then hardware concurrency.
int max_threads();
void set_max_threads(int n);

/// Runs fn(0), ..., fn(count-1) on up to max_threads() workers. Tasks must
/// only write to per-index state; results are then independent of the worker
/// count. The first exception (by task index) is rethrown.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace hylat

#endif  // HYLAT_PARALLEL_HPP
