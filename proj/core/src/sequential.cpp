#include "abc/sequential.hpp"

#include <algorithm>

namespace abc {

Rational LoadVector::total() const {
  Rational t = 0;
  for (const auto& l : loads) t += l;
  return t;
}

Rational LoadVector::max_load() const {
  Rational m = 0;
  for (const auto& l : loads) m = std::max(m, l);
  return m;
}

std::vector<CandidateId> SeqTrace::order() const {
  std::vector<CandidateId> out;
  out.reserve(rounds.size());
  for (const auto& r : rounds) out.push_back(r.chosen);
  return out;
}

Committee SeqTrace::committee() const { return Committee(order()); }

std::pair<Committee, SeqTrace> seq_thiele(ThieleFamily family, const ApprovalProfile& profile,
                                          int k, const Rational& p) {
  const int m = profile.num_candidates();
  if (k < 1 || k > m) throw domain_error("committee size k must satisfy 1 <= k <= m");

  ThieleWeights weights = [&] {
    switch (family) {
      case ThieleFamily::AV: return ThieleWeights::av(k);
      case ThieleFamily::CC: return ThieleWeights::cc(k);
      case ThieleFamily::PAV: return ThieleWeights::pav(k);
      default: return ThieleWeights::pgeometric(k, p);
    }
  }();
  std::vector<Rational> marginal(k + 1);
  for (int t = 1; t <= k; ++t) marginal[t] = weights.marginal(t);

  std::vector<int> approved_so_far(profile.num_voters(), 0);
  std::vector<bool> selected(m, false);
  SeqTrace trace;

  for (int round = 0; round < k; ++round) {
    int best = -1;
    Rational best_gain = -1;
    for (int c = 0; c < m; ++c) {
      if (selected[c]) continue;
      Rational gain = 0;
      profile.approver_set(c).for_each([&](int v) { gain += marginal[approved_so_far[v] + 1]; });
      if (best < 0 || gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    selected[best] = true;
    profile.approver_set(best).for_each([&](int v) { ++approved_so_far[v]; });
    trace.rounds.push_back({best, best_gain, {}});
  }
  return {trace.committee(), std::move(trace)};
}

std::pair<Committee, SeqTrace> greedy_monroe(const ApprovalProfile& profile, int k) {
  const int m = profile.num_candidates();
  const int n = profile.num_voters();
  if (k < 1 || k > m) throw domain_error("committee size k must satisfy 1 <= k <= m");

  IndexSet remaining(n);
  for (int i = 0; i < n; ++i) remaining.set(i);
  std::vector<bool> selected(m, false);
  const int floor_size = n / k;
  const int extras = n % k;
  SeqTrace trace;

  for (int round = 0; round < k; ++round) {
    const int group_size = floor_size + (round < extras ? 1 : 0);
    int best = -1, best_covered = -1;
    for (int c = 0; c < m; ++c) {
      if (selected[c]) continue;
      int covered = std::min(profile.approver_set(c).and_count(remaining), group_size);
      if (covered > best_covered) {
        best = c;
        best_covered = covered;
      }
    }
    selected[best] = true;

    std::vector<VoterId> group;
    group.reserve(group_size);
    const IndexSet& fans = profile.approver_set(best);
    for (int i = 0; i < n && static_cast<int>(group.size()) < best_covered; ++i)
      if (remaining.test(i) && fans.test(i)) group.push_back(i);
    for (int i = 0; i < n && static_cast<int>(group.size()) < group_size; ++i)
      if (remaining.test(i) && !fans.test(i)) group.push_back(i);
    for (VoterId v : group) remaining.unset(v);

    trace.rounds.push_back({best, Rational(best_covered), std::move(group)});
  }
  return {trace.committee(), std::move(trace)};
}

Rational phragmen_round_threshold(const LoadVector& loads, const std::vector<VoterId>& approvers) {
  if (approvers.empty()) throw infeasible_error("cannot distribute load: no approvers");
  std::vector<Rational> sorted;
  sorted.reserve(approvers.size());
  for (VoterId v : approvers) sorted.push_back(loads.loads[v]);
  std::sort(sorted.begin(), sorted.end());

  // Raise the r lowest-loaded approvers to a common level t; the right r is
  // the one whose level stays below the (r+1)-th load.
  Rational prefix = 0;
  const int q = static_cast<int>(sorted.size());
  for (int r = 1; r <= q; ++r) {
    prefix += sorted[r - 1];
    Rational t = (prefix + 1) / r;
    if (r == q || t <= sorted[r]) return t;
  }
  throw infeasible_error("water-filling failed");  // unreachable
}

std::tuple<Committee, SeqTrace, LoadVector> seq_phragmen(const ApprovalProfile& profile, int k) {
  const int m = profile.num_candidates();
  if (k < 1 || k > m) throw domain_error("committee size k must satisfy 1 <= k <= m");
  int approvable = 0;
  for (int c = 0; c < m; ++c)
    if (profile.approval_count(c) > 0) ++approvable;
  if (approvable < k)
    throw infeasible_error("only " + std::to_string(approvable) +
                           " candidates have approvers, need k=" + std::to_string(k));

  LoadVector lv;
  lv.loads.assign(profile.num_voters(), Rational(0));
  std::vector<bool> selected(m, false);
  std::vector<std::vector<VoterId>> fan_lists(m);
  for (int c = 0; c < m; ++c) fan_lists[c] = profile.approver_set(c).to_vector();
  Rational global_max = 0;
  SeqTrace trace;

  for (int round = 0; round < k; ++round) {
    int best = -1;
    Rational best_post_max, best_threshold;
    for (int c = 0; c < m; ++c) {
      if (selected[c] || fan_lists[c].empty()) continue;
      Rational t = phragmen_round_threshold(lv, fan_lists[c]);
      Rational post_max = std::max(global_max, t);
      if (best < 0 || post_max < best_post_max ||
          (post_max == best_post_max && t < best_threshold)) {
        best = c;
        best_post_max = post_max;
        best_threshold = t;
      }
    }
    selected[best] = true;
    for (VoterId v : fan_lists[best])
      if (lv.loads[v] < best_threshold) lv.loads[v] = best_threshold;
    global_max = best_post_max;
    lv.round = round + 1;
    trace.rounds.push_back({best, best_threshold, {}});
  }
  return {trace.committee(), std::move(trace), std::move(lv)};
}

}  // namespace abc
