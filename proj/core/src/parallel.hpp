#pragma once

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "resir/bench.hpp"

namespace resir::detail {

/// Runs body(k) for k in [1, jobs] on worker_count(jobs) threads. body must
/// only touch per-k state; the failure with the lowest k wins propagation.
template <typename Body>
void parallel_replicates(std::size_t jobs, const Body& body) {
  const unsigned workers = worker_count(jobs);
  if (workers <= 1) {
    for (std::size_t k = 1; k <= jobs; ++k) body(k);
    return;
  }

  std::mutex error_mutex;
  std::size_t failed_at = jobs + 1;
  std::exception_ptr error;

  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t k = 1 + w; k <= jobs; k += workers) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (k < failed_at) {
            failed_at = k;
            error = std::current_exception();
          }
          return;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

} // namespace resir::detail
