#pragma once

#include <cstdint>
#include <functional>

namespace recnodes {

// Worker count used by batch evaluations; 0 means hardware concurrency.
void set_thread_count(int threads);
int thread_count();

// Splits [0, n) into contiguous chunks, one per worker.  Results must not
// depend on the split, so chunk work has to be independent per element.
void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t begin, std::int64_t end)>& body);

} // namespace recnodes
