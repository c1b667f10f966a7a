#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace unitcodes::detail {

/// Splits [0, total) into `threads` contiguous ranges and runs
/// fn(begin, end, worker) on each. Exceptions propagate from the first
/// failing worker. Callers reduce per-worker results themselves so the
/// outcome never depends on scheduling.
template <class Fn>
void parallel_ranges(std::uint64_t total, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || total < 2 * threads) {
    fn(std::uint64_t{0}, total, 0u);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t b = std::min(total, w * chunk), e = std::min(total, b + chunk);
    pool.emplace_back([&, b, e, w] {
      try {
        fn(b, e, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace unitcodes::detail
