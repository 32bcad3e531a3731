#pragma once

#include <functional>

namespace fockcalc {

// Number of workers parallel_for would use for n independent items: bounded
// by the hardware concurrency and, when set, by the FOCKCALC_THREADS
// environment variable.
int worker_count(int n);

// Runs fn(0), ..., fn(n-1), possibly across threads.  fn must tolerate
// concurrent invocation on distinct indices.  The first exception thrown by
// any worker is rethrown on the calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace fockcalc
