#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spatialkit {

/// Calls fn(i) for i in [0, count) on up to `jobs` threads (strided). If any
/// call throws, the exception from the lowest failing index is rethrown, so
/// failures look the same for every job count.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (count == 0) return;
  jobs = std::max(1u, static_cast<unsigned>(std::min<std::size_t>(jobs, count)));

  std::mutex mutex;
  std::size_t failed_index = count;
  std::exception_ptr failure;

  auto worker = [&](unsigned slot) {
    for (std::size_t i = slot; i < count; i += jobs) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
        return;
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned s = 0; s < jobs; ++s) threads.emplace_back(worker, s);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace spatialkit
