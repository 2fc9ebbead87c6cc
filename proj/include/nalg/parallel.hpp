#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace nalg {

/// Worker cap for all parallel scans; 0 means hardware concurrency.
void set_max_workers(std::size_t n);
std::size_t max_workers();

/// Runs body(worker_index, item) over items [0, count) on up to max_workers()
/// threads. Items are handed out in increasing order. Exceptions propagate.
template <class Body>
void parallel_for(std::size_t count, Body body) {
  std::size_t workers = std::min(max_workers(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(std::size_t{0}, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; !stop.load() && (i = next.fetch_add(1)) < count;) body(w, i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        stop = true;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Smallest index in [0, count) satisfying pred, independent of the worker count.
template <class Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, Pred pred) {
  std::atomic<std::size_t> best{count};
  parallel_for(count, [&](std::size_t, std::size_t i) {
    if (i >= best.load()) return;
    if (!pred(i)) return;
    std::size_t cur = best.load();
    while (i < cur && !best.compare_exchange_weak(cur, i)) {
    }
  });
  std::size_t b = best.load();
  if (b == count) return std::nullopt;
  return b;
}

}  // namespace nalg
