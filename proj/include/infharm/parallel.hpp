#pragma once

#include <functional>

namespace infharm {

/// Number of workers for a requested thread count; 0 means auto
/// (hardware concurrency).
int resolve_thread_count(int requested);

/// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each,
/// across `threads` workers. threads <= 1 runs inline. Writes from
/// different chunks must not alias; results are then independent of the
/// worker count.
void parallel_for_rows(int n, int threads, const std::function<void(int, int)>& fn);

}  // namespace infharm
