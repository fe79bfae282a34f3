#pragma once

#include <cstddef>
#include <functional>

namespace tailscope {

// Worker-thread count: `requested` if nonzero, else the TAILSCOPE_THREADS
// environment variable, else hardware concurrency. Always >= 1.
std::size_t effective_threads(std::size_t requested = 0);

// Runs fn(begin, end) over disjoint chunks of [0, count). Callers must make
// per-index work independent (each index derives its own RNG stream) and
// reduce either with exact integer sums or by writing into index-addressed
// slots, so results do not depend on the chunking.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t)>& fn,
                     std::size_t threads = 0);

} // namespace tailscope
