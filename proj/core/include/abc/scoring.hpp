#pragma once

#include <utility>
#include <vector>

#include "abc/types.hpp"

namespace abc {

// H(0..k_max) as exact rationals, H(t) = 1 + 1/2 + ... + 1/t.
struct HarmonicTable {
  explicit HarmonicTable(int k_max);
  const Rational& operator()(int t) const { return values[t]; }
  std::vector<Rational> values;
};

// Cumulative weight table for a Thiele-family rule: a voter with t approved
// committee members contributes cumulative[t] to the committee score.
struct ThieleWeights {
  std::vector<Rational> cumulative;  // index 0..k, cumulative[0] == 0
  int k() const { return static_cast<int>(cumulative.size()) - 1; }
  Rational marginal(int t) const { return cumulative[t] - cumulative[t - 1]; }

  static ThieleWeights av(int k);
  static ThieleWeights cc(int k);
  static ThieleWeights pav(int k);
  static ThieleWeights pgeometric(int k, const Rational& p);
};

Rational thiele_score(const ApprovalProfile& profile, const Committee& w,
                      const ThieleWeights& weights);

// sc_av(W) = sum over members of |N(c)|; integer-valued.
Rational av_score(const ApprovalProfile& profile, const Committee& w);
// sc_cc(W) = |N(W)|, the number of voters covered by at least one member.
Rational cc_score(const ApprovalProfile& profile, const Committee& w);
Rational pav_score(const ApprovalProfile& profile, const Committee& w);
// Geometric weights 1/p^1, 1/p^2, ...; p = 1 degenerates to av_score.
Rational pgeometric_score(const ApprovalProfile& profile, const Committee& w, const Rational& p);

// Voter-to-member assignment with near-equal quotas floor(n/k)..ceil(n/k).
struct MonroeAssignment {
  std::vector<CandidateId> assigned;  // per voter, a member of the committee
  int satisfied_count = 0;            // voters assigned to a member they approve
};

// Best Monroe score over all quota-feasible assignments, with a witness.
// Solved as a single max flow: each member takes up to floor(n/k) approved
// voters directly, plus at most one extra unit drawn from a shared pool of
// size (n mod k); unmatched voters pad quotas as zero-satisfaction filler.
std::pair<Rational, MonroeAssignment> monroe_score(const ApprovalProfile& profile,
                                                   const Committee& w);

}  // namespace abc
