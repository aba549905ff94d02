#include "pcg/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace pcg {

  std::size_t worker_count() {
    if (char const* env = std::getenv("PCG_THREADS")) {
      try {
        long value = std::stol(env);
        if (value > 0) {
          return static_cast<std::size_t>(value);
        }
      } catch (std::exception const&) {
        // fall through to the hardware default
      }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }

  void parallel_for(std::size_t                              n,
                    std::function<void(std::size_t)> const& fn) {
    std::size_t const workers = std::min(worker_count(), n);
    if (workers <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        fn(i);
      }
      return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread>        threads;
    threads.reserve(workers);
    std::size_t const chunk = (n + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
      threads.emplace_back([&, t] {
        try {
          std::size_t const end = std::min(n, (t + 1) * chunk);
          for (std::size_t i = t * chunk; i < end; ++i) {
            fn(i);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : threads) {
      th.join();
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

}  // namespace pcg
