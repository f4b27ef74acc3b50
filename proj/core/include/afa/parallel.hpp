#pragma once

#include <cstdint>
#include <functional>

namespace afa {

// Worker count: AFA_THREADS env var if set, else hardware concurrency.
int thread_count();

// Runs fn over deterministic contiguous chunks [begin, end) of [0, n).
// Chunk boundaries depend only on n and thread_count(), so any reduction
// that folds per-chunk results in chunk order is reproducible for a fixed
// thread count. Small n runs inline on the caller.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn,
                  std::int64_t grain = 1024);

}  // namespace afa
