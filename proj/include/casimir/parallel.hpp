// Deterministic task-parallel map: results land in index order regardless of
// the worker count, so reductions are bit-stable.

#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace casimir {

template <typename T>
std::vector<T> parallel_map(int n_tasks, int workers,
                            const std::function<T(int)>& fn) {
  std::vector<T> out(static_cast<size_t>(std::max(n_tasks, 0)));
  if (n_tasks <= 0) return out;
  workers = std::max(1, std::min(workers, n_tasks));
  if (workers == 1) {
    for (int i = 0; i < n_tasks; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex err_mtx;
  auto body = [&]() {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= n_tasks) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mtx);
        if (!error) error = std::current_exception();
        next.store(n_tasks); // cancel remaining work
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

inline int default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

} // namespace casimir
