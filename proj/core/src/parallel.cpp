#include "muskat/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace muskat {

unsigned WorkerPool::default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("MUSKAT_THREADS")) {
    long requested = std::strtol(env, nullptr, 10);
    if (requested >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(requested));
  }
  return hw;
}

WorkerPool::WorkerPool(unsigned threads)
    : threads_(threads == 0 ? default_threads() : threads) {}

void WorkerPool::parallel_for(std::size_t begin, std::size_t end,
                              const std::function<void(std::size_t)>& fn) const {
  const std::size_t count = end > begin ? end - begin : 0;
  if (count == 0) return;
  const std::size_t workers = std::min<std::size_t>(threads_, count);
  if (workers <= 1 || count < 64) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    std::size_t lo = begin + w * chunk;
    std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (std::size_t i = begin; i < std::min(end, begin + chunk); ++i) fn(i);
  for (auto& t : pool) t.join();
}

}  // namespace muskat
