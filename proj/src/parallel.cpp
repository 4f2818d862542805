#include "recnodes/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace recnodes {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int threads)
{
  g_threads.store(threads < 0 ? 0 : threads);
}

int thread_count()
{
  int t = g_threads.load();
  if (t == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    t = hw ? static_cast<int>(hw) : 1;
  }
  return t;
}

void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& body)
{
  int workers = std::min<std::int64_t>(thread_count(), n);
  if (workers <= 1 || n < 256) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::int64_t begin = w * chunk;
    std::int64_t end = std::min(n, begin + chunk);
    if (begin >= end)
      break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool)
    t.join();
}

} // namespace recnodes
