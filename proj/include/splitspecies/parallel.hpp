#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace splitspecies {

/// Worker threads for internal fan-out: $SPLIT_SPECIES_THREADS when set to a
/// positive integer, otherwise the hardware concurrency.
int worker_count();

/// Splits [begin, end) into `chunks` contiguous ranges, runs `work(lo, hi)`
/// on each across worker_count() threads and returns the per-chunk results
/// in range order. Chunking does not depend on the thread count, so any
/// order-sensitive merge the caller does is deterministic.
template <class Work>
auto map_ranges(std::uint64_t begin, std::uint64_t end, std::uint64_t chunks, Work work)
    -> std::vector<decltype(work(begin, end))> {
  using Result = decltype(work(begin, end));
  const std::uint64_t span = end > begin ? end - begin : 0;
  chunks = std::max<std::uint64_t>(1, std::min(chunks, std::max<std::uint64_t>(span, 1)));
  std::vector<Result> results(chunks);
  auto bounds = [&](std::uint64_t c) { return begin + span * c / chunks; };

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto drain = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      try {
        results[c] = work(bounds(c), bounds(c + 1));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int threads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(worker_count()), chunks));
  if (threads <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(drain);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace splitspecies
