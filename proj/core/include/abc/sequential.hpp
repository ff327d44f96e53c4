#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "abc/scoring.hpp"
#include "abc/types.hpp"

namespace abc {

// Per-voter Phragmen loads after `round` completed rounds.  One unit of load
// is distributed per selected candidate, so the loads always sum to `round`.
struct LoadVector {
  std::vector<Rational> loads;
  int round = 0;

  Rational total() const;
  Rational max_load() const;
};

struct SeqRound {
  CandidateId chosen = -1;
  // Marginal score (greedy Thiele), covered-group size (greedy Monroe), or
  // water-filling threshold (sequential Phragmen).
  Rational value;
  std::vector<VoterId> removed_group;  // greedy Monroe only
};

struct SeqTrace {
  std::vector<SeqRound> rounds;
  std::vector<CandidateId> order() const;
  Committee committee() const;
};

enum class ThieleFamily { AV, CC, PAV, PGeometric };

// Greedy rule: each round adds the candidate with the largest exact marginal
// score, breaking ties by smallest candidate index.
std::pair<Committee, SeqTrace> seq_thiele(ThieleFamily family, const ApprovalProfile& profile,
                                          int k, const Rational& p = 1);

// k rounds; round i serves a voter group of size ceil(n/k) for the first
// (n mod k) rounds and floor(n/k) afterwards.  The candidate covering the
// most not-yet-removed approvers (capped at the group size) wins the round;
// its group is filled with its lowest-index approvers and padded with the
// lowest-index remaining voters, then removed.
std::pair<Committee, SeqTrace> greedy_monroe(const ApprovalProfile& profile, int k);

// Water-filling threshold t with sum over approvers of max(0, t - load) = 1.
Rational phragmen_round_threshold(const LoadVector& loads, const std::vector<VoterId>& approvers);

// Each round selects the candidate minimizing the post-round maximum voter
// load (ties: lower threshold, then lower index) and raises its approvers'
// loads to the round threshold.  Earlier loads are never redistributed.
std::tuple<Committee, SeqTrace, LoadVector> seq_phragmen(const ApprovalProfile& profile, int k);

}  // namespace abc
