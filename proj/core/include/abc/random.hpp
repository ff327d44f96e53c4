#pragma once

#include <cstdint>

#include "abc/types.hpp"

namespace abc {

// SplitMix64.  Chosen for its trivially portable, counter-based definition:
// any implementation seeded with the same 64-bit value emits the same stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound) via bottom rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t v = next();
    while (v < threshold) v = next();
    return v % bound;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Per voter: ballot size uniform in [min_size, max_size], then a uniformly
// random subset of that size.
ApprovalProfile gen_uniform_profile(std::uint64_t seed, int num_candidates = 20,
                                    int num_voters = 50, int min_size = 2, int max_size = 5);

}  // namespace abc
