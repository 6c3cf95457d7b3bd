#include "gfl/util/parallel.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>

namespace gfl::util {

namespace {
std::atomic<unsigned> override_threads{0};
}

unsigned thread_count() {
  if (const unsigned o = override_threads.load(); o > 0) return o;
  if (const char* env = std::getenv("GFL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void set_thread_count(unsigned n) { override_threads.store(n); }

bool& in_worker() {
  thread_local bool flag = false;
  return flag;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace gfl::util
