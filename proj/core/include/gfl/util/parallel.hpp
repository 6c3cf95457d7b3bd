#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace gfl::util {

/// Worker count: GFL_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();
/// Overrides thread_count() for the current process (0 restores the default).
void set_thread_count(unsigned n);
/// True on a worker thread of parallel_map; nested calls then run serially.
bool& in_worker();

/// Runs fn(i) for i in [0, n). Results are written by index, so output
/// order never depends on scheduling. The first exception (lowest index) is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn) {
  std::vector<T> out(n);
  const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1 || n < 2 || in_worker()) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      in_worker() = true;
      for (std::size_t i = w; i < n; i += workers) {
        try {
          out[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

/// Smallest index i in [0, n) with pred(i) true, or n. Deterministic; scans
/// in blocks and stops after the first block containing a hit.
template <class Pred>
std::size_t parallel_find_first(std::size_t n, Pred pred) {
  const std::size_t block = in_worker() ? n : std::max<std::size_t>(4 * thread_count(), 16);
  for (std::size_t lo = 0; lo < n; lo += block) {
    const std::size_t len = std::min(block, n - lo);
    auto hits = parallel_map<char>(len, [&](std::size_t i) { return static_cast<char>(pred(lo + i) ? 1 : 0); });
    for (std::size_t i = 0; i < len; ++i) {
      if (hits[i]) return lo + i;
    }
  }
  return n;
}

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

}  // namespace gfl::util
