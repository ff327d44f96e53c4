#include "abc/random.hpp"

#include <algorithm>
#include <numeric>

namespace abc {

ApprovalProfile gen_uniform_profile(std::uint64_t seed, int num_candidates, int num_voters,
                                    int min_size, int max_size) {
  if (min_size < 1 || min_size > max_size || max_size > num_candidates)
    throw param_error("ballot size range must satisfy 1 <= min <= max <= m");
  if (num_voters < 1) throw param_error("need at least one voter");

  SplitMix64 rng(seed);
  std::vector<std::vector<CandidateId>> ballots(num_voters);
  std::vector<CandidateId> pool(num_candidates);
  for (int i = 0; i < num_voters; ++i) {
    int size = rng.range(min_size, max_size);
    std::iota(pool.begin(), pool.end(), 0);
    for (int j = 0; j < size; ++j)  // partial Fisher-Yates
      std::swap(pool[j], pool[j + static_cast<int>(rng.below(num_candidates - j))]);
    ballots[i].assign(pool.begin(), pool.begin() + size);
    std::sort(ballots[i].begin(), ballots[i].end());
  }
  return ApprovalProfile(num_candidates, ballots);
}

}  // namespace abc
