#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lahyper::detail {

  // 0 means "one per hardware thread".
  inline std::size_t resolve_workers(std::size_t requested) noexcept {
    if (requested != 0) {
      return requested;
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }

  // Calls task(i) for every i in [0, count), handing indices out to up to
  // `workers` threads. The first exception thrown by any task is rethrown
  // on the calling thread once all threads have stopped.
  template <typename Task>
  void parallel_for(std::size_t count, std::size_t workers, Task&& task) {
    workers = std::min(resolve_workers(workers), count);
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        task(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool>        failed{false};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (auto i = next.fetch_add(1); i < count && !failed;
               i      = next.fetch_add(1)) {
            try {
              task(i);
            } catch (...) {
              std::lock_guard lock(error_mutex);
              if (!error) {
                error = std::current_exception();
              }
              failed = true;
            }
          }
        });
      }
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace lahyper::detail
