#ifndef FGT_PARALLEL_HPP
#define FGT_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fgt {

/// Runs fn(i) for i in [0, n) on up to `threads` workers and returns the
/// results indexed by i. Results are positioned by index, so the outcome is
/// schedule-independent; callers reduce them in index order.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t n, int threads, Fn&& fn) {
  std::vector<R> out(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    std::size_t i;
    while ((i = next.fetch_add(1)) < n) {
      if (failed.load()) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::size_t worker_count = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(worker_count);
  for (std::size_t t = 0; t < worker_count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
  return out;
}

}  // namespace fgt

#endif
