#pragma once

#include <cstddef>
#include <functional>

namespace graddens {

/// Number of workers used by data-parallel loops: the GRADDENS_THREADS
/// environment variable when set to a positive value, otherwise the
/// hardware concurrency (env value 0 also means auto). Always >= 1.
int worker_count();

/// Scoped override of worker_count(), used by the benchmark harness to
/// force serial execution while timing.
class ThreadLimit {
  public:
    explicit ThreadLimit(int workers);
    ~ThreadLimit();
    ThreadLimit(const ThreadLimit&) = delete;
    ThreadLimit& operator=(const ThreadLimit&) = delete;

  private:
    int previous_;
};

/// Runs body(i) for i in [begin, end) split into contiguous blocks, one
/// per worker. Each index is processed by exactly one thread, so loops
/// whose iterations only write disjoint outputs stay deterministic for
/// every worker count.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body);

}  // namespace graddens
