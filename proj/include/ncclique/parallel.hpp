#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ncc {

/// Runs f(i) for i in [0, n) on up to hardware_concurrency threads. Work is
/// handed out in chunks; f must only touch state owned by index i.
template <class F>
void parallel_for(std::size_t n, F&& f, std::size_t chunk = 16) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), (n + chunk - 1) / chunk);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    try {
      for (std::size_t begin; (begin = next.fetch_add(chunk)) < n;)
        for (std::size_t i = begin; i < std::min(n, begin + chunk); ++i) f(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace ncc
