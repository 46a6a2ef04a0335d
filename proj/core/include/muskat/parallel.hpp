#pragma once

#include <cstddef>
#include <functional>

namespace muskat {

// Fork-join helper for the embarrassingly parallel per-node loops.
// Each index is computed independently and written to its own slot, so
// results do not depend on thread scheduling.
class WorkerPool {
public:
  explicit WorkerPool(unsigned threads = 0);

  unsigned threads() const { return threads_; }

  // Runs fn(i) for i in [begin, end), partitioned into contiguous chunks.
  void parallel_for(std::size_t begin, std::size_t end,
                    const std::function<void(std::size_t)>& fn) const;

  // Worker count from MUSKAT_THREADS (capped), else hardware concurrency.
  static unsigned default_threads();

private:
  unsigned threads_;
};

}  // namespace muskat
