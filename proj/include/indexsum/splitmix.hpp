#pragma once

#include <cstdint>

namespace indexsum {

/// SplitMix64 (Steele, Lea, Flood). state += 0x9E3779B97F4A7C15, then the
/// output is mixed with shifts 30/27/31 and multipliers 0xBF58476D1CE4E5B9,
/// 0x94D049BB133111EB. Used for every seeded draw so corpora are portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// next() mod n, n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace indexsum
