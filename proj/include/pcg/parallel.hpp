#ifndef PCG_PARALLEL_HPP_
#define PCG_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace pcg {

  // Number of worker threads: PCG_THREADS if set to a positive integer,
  // otherwise the hardware concurrency (at least 1).
  std::size_t worker_count();

  // Calls fn(i) for every i in [0, n), distributing indices over up to
  // worker_count() threads in contiguous chunks. fn must be safe to call
  // concurrently for distinct i. Exceptions from workers are rethrown
  // (the one from the lowest chunk wins).
  void parallel_for(std::size_t n, std::function<void(std::size_t)> const& fn);

}  // namespace pcg

#endif  // PCG_PARALLEL_HPP_
