#pragma once

#include <cstdint>
#include <functional>

namespace entropygraph {

/// Worker count from ENTROPYGRAPH_THREADS (default: hardware concurrency, capped at 4x that).
int thread_count();

/// Runs body(chunk) for chunk = 0..chunks-1 on up to thread_count() threads.
/// Chunks are independent; callers write results into per-chunk slots and reduce
/// them in chunk order, so output does not depend on the thread count.
void parallel_for_chunks(std::int64_t chunks, const std::function<void(std::int64_t)>& body);

} // namespace entropygraph
