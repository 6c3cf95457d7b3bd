#pragma once

#include <cstdint>
#include <random>

namespace gfl::util {

/// Seeded generator with a portable bounded draw (the standard distributions
/// are not specified bit-exactly across library implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  /// Uniform-ish value in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (gen_() & 1U) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gfl::util
