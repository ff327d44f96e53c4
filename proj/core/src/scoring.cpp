#include "abc/scoring.hpp"

#include <algorithm>

#include "maxflow.hpp"

namespace abc {

HarmonicTable::HarmonicTable(int k_max) {
  values.resize(k_max + 1);
  values[0] = 0;
  for (int t = 1; t <= k_max; ++t) values[t] = values[t - 1] + Rational(1, t);
}

ThieleWeights ThieleWeights::av(int k) {
  ThieleWeights w;
  w.cumulative.resize(k + 1);
  for (int t = 0; t <= k; ++t) w.cumulative[t] = t;
  return w;
}

ThieleWeights ThieleWeights::cc(int k) {
  ThieleWeights w;
  w.cumulative.resize(k + 1);
  for (int t = 0; t <= k; ++t) w.cumulative[t] = t > 0 ? 1 : 0;
  return w;
}

ThieleWeights ThieleWeights::pav(int k) {
  ThieleWeights w;
  w.cumulative = HarmonicTable(k).values;
  return w;
}

ThieleWeights ThieleWeights::pgeometric(int k, const Rational& p) {
  if (p < 1) throw domain_error("geometric parameter p must be >= 1");
  ThieleWeights w;
  w.cumulative.resize(k + 1);
  w.cumulative[0] = 0;
  Rational power = 1;
  for (int t = 1; t <= k; ++t) {
    power /= p;
    w.cumulative[t] = w.cumulative[t - 1] + power;
  }
  return w;
}

Rational thiele_score(const ApprovalProfile& profile, const Committee& w,
                      const ThieleWeights& weights) {
  profile.require_committee(w);
  if (w.size() > weights.k()) throw domain_error("weight table shorter than committee");
  IndexSet mask = w.mask(profile.num_candidates());
  // Bucket voters by intersection size; one rational multiply per bucket.
  std::vector<int> bucket(w.size() + 1, 0);
  for (int i = 0; i < profile.num_voters(); ++i) ++bucket[profile.ballot(i).and_count(mask)];
  Rational score = 0;
  for (int t = 1; t <= w.size(); ++t)
    if (bucket[t]) score += Rational(bucket[t]) * weights.cumulative[t];
  return score;
}

Rational av_score(const ApprovalProfile& profile, const Committee& w) {
  profile.require_committee(w);
  long long total = 0;
  for (CandidateId c : w.members()) total += profile.approval_count(c);
  return total;
}

Rational cc_score(const ApprovalProfile& profile, const Committee& w) {
  profile.require_committee(w);
  return covered_mask(profile, w.members()).count();
}

Rational pav_score(const ApprovalProfile& profile, const Committee& w) {
  return thiele_score(profile, w, ThieleWeights::pav(w.size()));
}

Rational pgeometric_score(const ApprovalProfile& profile, const Committee& w, const Rational& p) {
  return thiele_score(profile, w, ThieleWeights::pgeometric(w.size(), p));
}

std::pair<Rational, MonroeAssignment> monroe_score(const ApprovalProfile& profile,
                                                   const Committee& w) {
  profile.require_committee(w);
  const int k = w.size();
  if (k < 1) throw domain_error("Monroe needs a nonempty committee");
  const int n = profile.num_voters();
  const int floor_quota = n / k;
  const int extras = n % k;  // this many members take floor_quota + 1

  // Nodes: 0 = source, 1..n voters, n+1..n+k members, n+k+1 pool, n+k+2 sink.
  const int source = 0, pool = n + k + 1, sink = n + k + 2;
  auto member_node = [&](int j) { return n + 1 + j; };
  detail::MaxFlow flow(n + k + 3);

  IndexSet mask = w.mask(profile.num_candidates());
  std::vector<std::vector<int>> voter_edges(n);
  for (int i = 0; i < n; ++i) {
    if (!profile.ballot(i).intersects(mask)) continue;
    flow.add_edge(source, 1 + i, 1);
    for (int j = 0; j < k; ++j)
      if (profile.ballot(i).test(w.members()[j]))
        voter_edges[i].push_back(flow.add_edge(1 + i, member_node(j), 1));
  }
  std::vector<int> direct_edges(k), pool_edges(k, -1);
  for (int j = 0; j < k; ++j) {
    direct_edges[j] = flow.add_edge(member_node(j), sink, floor_quota);
    if (extras > 0) pool_edges[j] = flow.add_edge(member_node(j), pool, 1);
  }
  if (extras > 0) flow.add_edge(pool, sink, extras);

  const int satisfied = static_cast<int>(flow.run(source, sink));

  MonroeAssignment result;
  result.satisfied_count = satisfied;
  result.assigned.assign(n, -1);
  std::vector<int> load(k, 0);
  // Recover matched voters from edge flows.
  for (int i = 0; i < n; ++i) {
    int pos = 0;
    for (int j = 0; j < k; ++j) {
      if (!profile.ballot(i).test(w.members()[j])) continue;
      if (flow.flow_on(voter_edges[i][pos]) > 0) {
        result.assigned[i] = w.members()[j];
        ++load[j];
        break;
      }
      ++pos;
    }
  }

  // Fix the ceiling members: pool users first, then lowest indices.
  std::vector<int> quota(k, floor_quota);
  int ceilings = 0;
  for (int j = 0; j < k && ceilings < extras; ++j)
    if (pool_edges[j] >= 0 && flow.flow_on(pool_edges[j]) > 0) {
      quota[j] = floor_quota + 1;
      ++ceilings;
    }
  for (int j = 0; j < k && ceilings < extras; ++j)
    if (quota[j] == floor_quota) {
      quota[j] = floor_quota + 1;
      ++ceilings;
    }

  // Unmatched voters pad members up to quota; satisfaction stays fixed
  // (an approving filler would contradict flow maximality).
  int next_member = 0;
  for (int i = 0; i < n; ++i) {
    if (result.assigned[i] >= 0) continue;
    while (load[next_member] >= quota[next_member]) ++next_member;
    result.assigned[i] = w.members()[next_member];
    ++load[next_member];
  }

  return {Rational(satisfied), std::move(result)};
}

}  // namespace abc
