#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace gfid {

/// Worker count from GF_THREADS, falling back to the number of cores.
int default_parallelism();

/// splitmix64 finalizer applied to root + (index + 1) * 0x9E3779B97F4A7C15.
/// Derives independent per-chunk / per-row seeds from a root seed.
std::uint64_t mix_seed(std::uint64_t root, std::uint64_t index);

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Work items are
/// claimed dynamically, so fn must only write to per-index storage. The first
/// exception thrown by any item is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  const auto n = static_cast<std::size_t>(threads) < count ? static_cast<std::size_t>(threads) : count;
  std::vector<std::jthread> pool;
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

/// Fixed-shape pairwise sum; the result depends only on the input order.
double pairwise_sum(std::span<const double> values);

}  // namespace gfid
