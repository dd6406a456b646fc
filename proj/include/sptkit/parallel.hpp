#pragma once

#include <cstddef>
#include <functional>

namespace sptkit {

/// Worker count used by range scans. 0 selects the hardware concurrency.
void set_thread_count(unsigned threads);
unsigned thread_count();

/// Calls `body(i)` for every i in [begin, end), split into contiguous chunks
/// over `thread_count()` workers. The first exception thrown by any worker is
/// rethrown on the calling thread.
void parallel_for(long begin, long end, const std::function<void(long)>& body);

}  // namespace sptkit
