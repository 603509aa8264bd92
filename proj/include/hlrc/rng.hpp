#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace hlrc {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen for its tiny, fully specified
/// state update so traces are reproducible everywhere from the seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection. bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// `count` distinct values of {1, ..., n} in draw order (partial Fisher-Yates).
  std::vector<std::size_t> sample(std::size_t n, std::size_t count) {
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{1});
    for (std::size_t i = 0; i < count && i < n; ++i) {
      const auto j = i + static_cast<std::size_t>(below(n - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(count < n ? count : n);
    return pool;
  }

 private:
  std::uint64_t state_;
};

}  // namespace hlrc
