#pragma once

#include <cstddef>
#include <functional>

namespace halfweight {

// Global cap on worker threads (CLI --threads); 0 means hardware default.
void set_thread_cap(unsigned cap);
unsigned effective_threads();

// Runs fn(begin..end) split into contiguous chunks across threads.  Chunk
// boundaries depend only on (end - begin, thread count), so exact
// accumulations done per-chunk and merged in index order are deterministic.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace halfweight
