#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace tsrforge {

/// 0 means one worker per hardware thread.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace detail {

template <class Body>
void run_workers(unsigned threads, Body body) {
  threads = resolve_threads(threads);
  if (threads == 1) {
    body(0u, 1u);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        body(t, threads);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Smallest index in [0, count) whose `test(i)` yields a value, with that value.
/// Workers stride the index space and stop once past the best index found, so
/// the answer does not depend on the thread count.
template <class T, class Test>
std::optional<std::pair<std::uint64_t, T>> parallel_find_first(std::uint64_t count, unsigned threads, Test test) {
  std::atomic<std::uint64_t> best{count};
  std::mutex mutex;
  std::optional<std::pair<std::uint64_t, T>> result;
  detail::run_workers(threads, [&](unsigned t, unsigned stride) {
    for (std::uint64_t i = t; i < count; i += stride) {
      if (i > best.load(std::memory_order_relaxed)) return;
      std::optional<T> hit = test(i);
      if (!hit) continue;
      std::lock_guard lock(mutex);
      if (i < best.load()) {
        best.store(i);
        result.emplace(i, std::move(*hit));
      }
      return;
    }
  });
  return result;
}

/// Values of `map(i)` that are present, in increasing index order.
template <class T, class Map>
std::vector<T> parallel_filter(std::uint64_t count, unsigned threads, Map map) {
  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<std::pair<std::uint64_t, T>>> partial(workers);
  detail::run_workers(workers, [&](unsigned t, unsigned stride) {
    for (std::uint64_t i = t; i < count; i += stride) {
      std::optional<T> v = map(i);
      if (v) partial[t].emplace_back(i, std::move(*v));
    }
  });
  std::vector<std::pair<std::uint64_t, T>> merged;
  for (auto& p : partial) {
    for (auto& e : p) merged.push_back(std::move(e));
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<T> out;
  out.reserve(merged.size());
  for (auto& e : merged) out.push_back(std::move(e.second));
  return out;
}

/// Number of indices with `pred(i)` true.
template <class Pred>
std::uint64_t parallel_count(std::uint64_t count, unsigned threads, Pred pred) {
  std::atomic<std::uint64_t> total{0};
  detail::run_workers(threads, [&](unsigned t, unsigned stride) {
    std::uint64_t local = 0;
    for (std::uint64_t i = t; i < count; i += stride) local += pred(i) ? 1 : 0;
    total += local;
  });
  return total.load();
}

}  // namespace tsrforge
