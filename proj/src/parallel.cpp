#include "ckasym/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ckasym::parallel {

namespace {

std::atomic<unsigned> g_max_threads{0};
thread_local bool t_inside_worker = false;

unsigned resolved_threads() {
  unsigned n = g_max_threads.load(std::memory_order_relaxed);
  if (n == 0) {
    n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
  }
  return n;
}

}  // namespace

void set_max_threads(unsigned n) {
  g_max_threads.store(n, std::memory_order_relaxed);
}

unsigned max_threads() { return resolved_threads(); }

void for_blocks(std::size_t n,
                const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  const unsigned want = resolved_threads();
  if (want <= 1 || n < 2 || t_inside_worker) {
    body(0, n);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(want, n);
  const std::size_t chunk = (n + workers - 1) / workers;

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&](std::size_t lo, std::size_t hi) {
    t_inside_worker = true;
    try {
      body(lo, hi);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
    t_inside_worker = false;
  };

  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t lo = std::min(n, w * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo < hi) threads.emplace_back(run, lo, hi);
  }
  run(0, std::min(n, chunk));
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ckasym::parallel
