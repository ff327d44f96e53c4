#pragma once

#include <optional>
#include <vector>

#include "abc/rules.hpp"
#include "abc/types.hpp"

namespace abc {

struct DominationWitness {
  Committee dominator;
  VoterId strictly_better_voter = -1;
};

// W1 dominates W2: every voter approves at least as many members of W1 as of
// W2, and some voter approves strictly more.
bool dominates(const ApprovalProfile& profile, const Committee& w1, const Committee& w2);

// First committee (lexicographic order) dominating w, with a strict voter.
std::optional<DominationWitness> find_dominator(const ApprovalProfile& profile, const Committee& w,
                                                int k, const EnumerationLimits& limits = {});

// Any two ballots are equal or disjoint.
bool is_party_list(const ApprovalProfile& profile);

// A voter bloc large enough to be owed `level` committee seats.
struct CohesiveGroup {
  std::vector<VoterId> voters;
  int level = 0;
  std::vector<CandidateId> common_candidates;
};

// The maximal cohesive group of each party (distinct nonempty ballot) on a
// party-list profile, with the strongest level it attains.
std::vector<CohesiveGroup> party_cohesive_groups(const ApprovalProfile& profile, int k);

// Every party whose size entitles it to l seats holds at least l seats in w.
// Precondition: party-list profile (throws domain_error otherwise).
bool lower_quota_holds(const ApprovalProfile& profile, int k, const Committee& w);

}  // namespace abc
