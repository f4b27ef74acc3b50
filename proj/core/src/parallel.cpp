#include "afa/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace afa {

int thread_count() {
  static const int count = [] {
    if (const char* env = std::getenv("AFA_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }();
  return count;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn,
                  std::int64_t grain) {
  if (n <= 0) return;
  const int workers = thread_count();
  if (workers <= 1 || n <= grain) {
    fn(0, n);
    return;
  }
  const std::int64_t chunks = std::min<std::int64_t>(workers, (n + grain - 1) / grain);
  const std::int64_t step = (n + chunks - 1) / chunks;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks) - 1);
  for (std::int64_t c = 1; c < chunks; ++c) {
    const std::int64_t b = c * step;
    const std::int64_t e = std::min(n, b + step);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  fn(0, std::min(n, step));
  for (auto& t : pool) t.join();
}

}  // namespace afa
