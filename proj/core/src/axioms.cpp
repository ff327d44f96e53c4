#include "abc/axioms.hpp"

#include <algorithm>
#include <map>

namespace abc {

bool dominates(const ApprovalProfile& profile, const Committee& w1, const Committee& w2) {
  if (w1.size() != w2.size()) throw domain_error("dominance compares equal-size committees");
  profile.require_committee(w1);
  profile.require_committee(w2);
  IndexSet m1 = w1.mask(profile.num_candidates());
  IndexSet m2 = w2.mask(profile.num_candidates());
  bool strict = false;
  for (int i = 0; i < profile.num_voters(); ++i) {
    int a = profile.ballot(i).and_count(m1);
    int b = profile.ballot(i).and_count(m2);
    if (a < b) return false;
    if (a > b) strict = true;
  }
  return strict;
}

std::optional<DominationWitness> find_dominator(const ApprovalProfile& profile, const Committee& w,
                                                int k, const EnumerationLimits& limits) {
  if (w.size() != k) throw domain_error("committee size differs from k");
  profile.require_committee(w);
  check_enumeration_budget(profile.num_candidates(), k, limits);

  const int n = profile.num_voters();
  IndexSet target_mask = w.mask(profile.num_candidates());
  std::vector<int> target_counts(n);
  for (int i = 0; i < n; ++i) target_counts[i] = profile.ballot(i).and_count(target_mask);

  CommitteeEnumerator it(profile.num_candidates(), k);
  const std::vector<CandidateId>* members;
  IndexSet mask(profile.num_candidates());
  while (it.next(members)) {
    mask.clear();
    for (CandidateId c : *members) mask.set(c);
    if (mask == target_mask) continue;
    int strict_voter = -1;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      int a = profile.ballot(i).and_count(mask);
      if (a < target_counts[i]) {
        ok = false;
        break;
      }
      if (strict_voter < 0 && a > target_counts[i]) strict_voter = i;
    }
    if (ok && strict_voter >= 0) return DominationWitness{Committee(*members), strict_voter};
  }
  return std::nullopt;
}

namespace {

std::map<IndexSet, int> party_sizes(const ApprovalProfile& profile) {
  std::map<IndexSet, int> parties;
  for (int i = 0; i < profile.num_voters(); ++i) ++parties[profile.ballot(i)];
  return parties;
}

}  // namespace

bool is_party_list(const ApprovalProfile& profile) {
  auto parties = party_sizes(profile);
  std::vector<const IndexSet*> distinct;
  for (const auto& [ballot, count] : parties) distinct.push_back(&ballot);
  for (std::size_t a = 0; a < distinct.size(); ++a)
    for (std::size_t b = a + 1; b < distinct.size(); ++b)
      if (distinct[a]->intersects(*distinct[b])) return false;  // distinct, so not equal
  return true;
}

std::vector<CohesiveGroup> party_cohesive_groups(const ApprovalProfile& profile, int k) {
  if (k < 1) throw domain_error("k must be >= 1");
  if (!is_party_list(profile)) throw domain_error("cohesive groups need a party-list profile");
  const long long n = profile.num_voters();
  std::vector<CohesiveGroup> groups;
  for (const auto& [ballot, size] : party_sizes(profile)) {
    if (ballot.count() == 0) continue;
    // Largest l with size >= n*l/k and |ballot| >= l.
    int level =
        static_cast<int>(std::min<long long>(static_cast<long long>(size) * k / n, ballot.count()));
    if (level < 1) continue;
    CohesiveGroup g;
    g.level = level;
    g.common_candidates = ballot.to_vector();
    for (int i = 0; i < profile.num_voters(); ++i)
      if (profile.ballot(i) == ballot) g.voters.push_back(i);
    groups.push_back(std::move(g));
  }
  return groups;
}

bool lower_quota_holds(const ApprovalProfile& profile, int k, const Committee& w) {
  profile.require_committee(w);
  if (w.size() != k) throw domain_error("committee size differs from k");
  IndexSet mask = w.mask(profile.num_candidates());
  for (const auto& group : party_cohesive_groups(profile, k)) {
    IndexSet ballot(profile.num_candidates());
    for (CandidateId c : group.common_candidates) ballot.set(c);
    if (ballot.and_count(mask) < group.level) return false;
  }
  return true;
}

}  // namespace abc
