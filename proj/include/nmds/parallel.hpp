#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nmds {

unsigned default_worker_count();

// Runs fn(task_index) for every task in [0, task_count) on up to `workers`
// threads and returns the results indexed by task. Scheduling is dynamic but
// the result vector is ordered by task, so any fold over it is independent of
// the worker count. The first exception thrown by a task is rethrown.
template <class Result, class Fn>
std::vector<Result> run_tasks(std::size_t task_count, unsigned workers, Fn&& fn) {
  std::vector<Result> results(task_count);
  if (task_count == 0) return results;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(task_count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < task_count; ++i) results[i] = fn(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= task_count) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(task_count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace nmds
