#include "abc/rules.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>
#include <utility>

#include "maxflow.hpp"

namespace abc {

namespace {

std::string format_p(const Rational& p) {
  // Prefer a short decimal when it terminates (geom:1.5), else num/den.
  BigInt den = denominator(p);
  BigInt scale = 1'000'000'000;
  if (scale % den == 0) {
    std::string s = decimal_string(p, 9);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
  }
  return rational_string(p);
}

}  // namespace

RuleId RuleId::parse(const std::string& text) {
  auto geom = [&](const std::string& prefix, RuleTag tag) -> std::optional<RuleId> {
    if (text.rfind(prefix, 0) != 0) return std::nullopt;
    Rational p = parse_rational(text.substr(prefix.size()));
    if (p < 1) throw domain_error("geometric parameter p must be >= 1, got " + text);
    return RuleId{tag, p};
  };
  if (text == "av") return {RuleTag::AV};
  if (text == "cc") return {RuleTag::CC};
  if (text == "pav") return {RuleTag::PAV};
  if (text == "monroe") return {RuleTag::Monroe};
  if (text == "opt-phragmen") return {RuleTag::OptPhragmen};
  if (text == "seq-av") return {RuleTag::SeqAV};
  if (text == "seq-cc") return {RuleTag::SeqCC};
  if (text == "seq-pav") return {RuleTag::SeqPAV};
  if (text == "seq-phragmen") return {RuleTag::SeqPhragmen};
  if (text == "greedy-monroe") return {RuleTag::GreedyMonroe};
  if (text == "lower-quota") return {RuleTag::LowerQuota};
  if (auto r = geom("geom:", RuleTag::PGeometric)) return *r;
  if (auto r = geom("seq-geom:", RuleTag::SeqPGeometric)) return *r;
  throw domain_error("unknown rule '" + text + "'");
}

std::string RuleId::name() const {
  switch (tag) {
    case RuleTag::AV: return "av";
    case RuleTag::CC: return "cc";
    case RuleTag::PAV: return "pav";
    case RuleTag::PGeometric: return "geom:" + format_p(p);
    case RuleTag::Monroe: return "monroe";
    case RuleTag::OptPhragmen: return "opt-phragmen";
    case RuleTag::SeqAV: return "seq-av";
    case RuleTag::SeqCC: return "seq-cc";
    case RuleTag::SeqPAV: return "seq-pav";
    case RuleTag::SeqPGeometric: return "seq-geom:" + format_p(p);
    case RuleTag::GreedyMonroe: return "greedy-monroe";
    case RuleTag::SeqPhragmen: return "seq-phragmen";
    case RuleTag::LowerQuota: return "lower-quota";
  }
  return "?";
}

bool RuleId::is_sequential() const {
  switch (tag) {
    case RuleTag::SeqAV:
    case RuleTag::SeqCC:
    case RuleTag::SeqPAV:
    case RuleTag::SeqPGeometric:
    case RuleTag::GreedyMonroe:
    case RuleTag::SeqPhragmen: return true;
    default: return false;
  }
}

long long check_enumeration_budget(int m, int k, const EnumerationLimits& limits) {
  if (k < 0 || k > m)
    throw domain_error("committee size k=" + std::to_string(k) +
                       " must satisfy 0 <= k <= m=" + std::to_string(m));
  BigInt count = binomial(m, k);
  if (count > limits.max_committees) throw budget_error(count.str(), limits.max_committees);
  return count.convert_to<long long>();
}

namespace {

// Scaled-integer view of a cumulative weight table: cumulative[t] * common_den
// fits in int64 together with the worst-case committee score.
struct ScaledWeights {
  bool usable = false;
  std::vector<long long> cumulative;
  BigInt common_den = 1;
};

ScaledWeights scale_weights(const ThieleWeights& weights, int num_voters) {
  ScaledWeights sw;
  for (const auto& c : weights.cumulative)
    sw.common_den = boost::multiprecision::lcm(sw.common_den, denominator(c));
  BigInt worst = 0;
  std::vector<BigInt> scaled;
  for (const auto& c : weights.cumulative) {
    BigInt v = numerator(c) * (sw.common_den / denominator(c));
    scaled.push_back(v);
    worst = std::max(worst, v);
  }
  worst *= num_voters;
  if (worst > std::numeric_limits<long long>::max() / 4) return sw;  // rational fallback
  sw.usable = true;
  for (const auto& v : scaled) sw.cumulative.push_back(v.convert_to<long long>());
  return sw;
}

template <class Score, class Better>
RuleOutcome enumerate_argmax(const ApprovalProfile& profile, int k, Score per_committee,
                             Better strictly_better) {
  CommitteeEnumerator it(profile.num_candidates(), k);
  const std::vector<CandidateId>* members;
  RuleOutcome out;
  bool have = false;
  decltype(per_committee(std::declval<const std::vector<CandidateId>&>())) best{};
  while (it.next(members)) {
    auto value = per_committee(*members);
    if (!have || strictly_better(value, best)) {
      best = value;
      out.winners.clear();
      out.winners.emplace_back(*members);
      have = true;
    } else if (!strictly_better(best, value)) {
      out.winners.emplace_back(*members);
    }
  }
  if constexpr (std::is_same_v<decltype(best), Rational>) out.optimum = best;
  return out;
}

RuleOutcome thiele_winners(const ApprovalProfile& profile, int k, const ThieleWeights& weights) {
  const int n = profile.num_voters();
  const int m = profile.num_candidates();
  ScaledWeights sw = scale_weights(weights, n);
  IndexSet mask(m);

  if (sw.usable) {
    auto score = [&](const std::vector<CandidateId>& members) {
      mask.clear();
      for (CandidateId c : members) mask.set(c);
      long long s = 0;
      for (int i = 0; i < n; ++i) s += sw.cumulative[profile.ballot(i).and_count(mask)];
      return s;
    };
    RuleOutcome out =
        enumerate_argmax(profile, k, score, [](long long a, long long b) { return a > b; });
    out.optimum = Rational(BigInt(score(out.winners.front().members())), sw.common_den);
    return out;
  }

  auto score = [&](const std::vector<CandidateId>& members) {
    mask.clear();
    for (CandidateId c : members) mask.set(c);
    std::vector<int> bucket(k + 1, 0);
    for (int i = 0; i < n; ++i) ++bucket[profile.ballot(i).and_count(mask)];
    Rational s = 0;
    for (int t = 1; t <= k; ++t)
      if (bucket[t]) s += Rational(bucket[t]) * weights.cumulative[t];
    return s;
  };
  return enumerate_argmax(profile, k, score,
                          [](const Rational& a, const Rational& b) { return a > b; });
}

RuleOutcome monroe_winners(const ApprovalProfile& profile, int k) {
  auto score = [&](const std::vector<CandidateId>& members) {
    return monroe_score(profile, Committee(members)).first;
  };
  RuleOutcome out = enumerate_argmax(profile, k, score,
                                     [](const Rational& a, const Rational& b) { return a > b; });
  out.assignment = monroe_score(profile, out.winners.front()).second;
  return out;
}

// Max over nonempty subsets of |W'| / |N(W')|, built bottom-up over the
// subset lattice.  Throws if a member has no approvers at all.
Rational subset_load(const ApprovalProfile& profile, const std::vector<CandidateId>& members) {
  const int k = static_cast<int>(members.size());
  for (CandidateId c : members)
    if (profile.approval_count(c) == 0)
      throw infeasible_error("candidate " + std::to_string(c) +
                             " has no approvers; committee load is unbounded");
  std::vector<IndexSet> covered(std::size_t(1) << k);
  covered[0] = IndexSet(profile.num_voters());
  Rational worst = 0;
  for (std::size_t s = 1; s < covered.size(); ++s) {
    int low = std::countr_zero(s);
    covered[s] = covered[s & (s - 1)];
    covered[s] |= profile.approver_set(members[low]);
    worst = std::max(worst, Rational(std::popcount(s), covered[s].count()));
  }
  return worst;
}

// Witness distribution: feasibility flow at the optimal level a/b, scaled to
// integers (members push b units, voters absorb at most a).
LoadVector opt_phragmen_distribution(const ApprovalProfile& profile,
                                     const std::vector<CandidateId>& members,
                                     const Rational& level) {
  const int n = profile.num_voters();
  const int k = static_cast<int>(members.size());
  const long long a = numerator(level).convert_to<long long>();
  const long long b = denominator(level).convert_to<long long>();
  const int source = 0, sink = 1 + k + n;
  detail::MaxFlow flow(n + k + 2);
  for (int j = 0; j < k; ++j) flow.add_edge(source, 1 + j, b);
  std::vector<std::pair<int, int>> voter_edges;  // (edge id, voter)
  for (int j = 0; j < k; ++j)
    profile.approver_set(members[j]).for_each(
        [&](int v) { flow.add_edge(1 + j, 1 + k + v, b); });
  for (int v = 0; v < n; ++v) voter_edges.push_back({flow.add_edge(1 + k + v, sink, a), v});
  long long pushed = flow.run(source, sink);
  if (pushed != static_cast<long long>(k) * b)
    throw infeasible_error("load level infeasible");  // subset formula guarantees this never fires
  LoadVector lv;
  lv.loads.assign(n, Rational(0));
  lv.round = k;
  for (auto [edge, v] : voter_edges) lv.loads[v] = Rational(flow.flow_on(edge), b);
  return lv;
}

}  // namespace

Rational optimal_phragmen_load(const ApprovalProfile& profile, const Committee& w) {
  profile.require_committee(w);
  if (w.size() < 1) throw domain_error("committee must be nonempty");
  return subset_load(profile, w.members());
}

RuleOutcome opt_phragmen_winners(const ApprovalProfile& profile, int k,
                                 const EnumerationLimits& limits) {
  if (k < 1) throw domain_error("committee size k must be >= 1");
  check_enumeration_budget(profile.num_candidates(), k, limits);

  CommitteeEnumerator it(profile.num_candidates(), k);
  const std::vector<CandidateId>* members;
  RuleOutcome out;
  bool have = false;
  while (it.next(members)) {
    bool feasible = true;
    for (CandidateId c : *members)
      if (profile.approval_count(c) == 0) {
        feasible = false;
        break;
      }
    if (!feasible) continue;
    Rational load = subset_load(profile, *members);
    if (!have || load < out.optimum) {
      out.optimum = load;
      out.winners.clear();
      out.winners.emplace_back(*members);
      have = true;
    } else if (load == out.optimum) {
      out.winners.emplace_back(*members);
    }
  }
  if (!have)
    throw infeasible_error("every size-" + std::to_string(k) +
                           " committee contains a candidate with no approvers");
  out.loads = opt_phragmen_distribution(profile, out.winners.front().members(), out.optimum);
  return out;
}

RuleOutcome winners(const RuleId& rule, const ApprovalProfile& profile, int k,
                    const EnumerationLimits& limits) {
  const int m = profile.num_candidates();
  if (k < 1 || k > m) throw domain_error("committee size k must satisfy 1 <= k <= m");

  if (rule.is_sequential()) {
    RuleOutcome out;
    switch (rule.tag) {
      case RuleTag::SeqAV:
      case RuleTag::SeqCC:
      case RuleTag::SeqPAV:
      case RuleTag::SeqPGeometric: {
        ThieleFamily family = rule.tag == RuleTag::SeqAV   ? ThieleFamily::AV
                              : rule.tag == RuleTag::SeqCC ? ThieleFamily::CC
                              : rule.tag == RuleTag::SeqPAV
                                  ? ThieleFamily::PAV
                                  : ThieleFamily::PGeometric;
        auto [committee, trace] = seq_thiele(family, profile, k, rule.p);
        switch (family) {
          case ThieleFamily::AV: out.optimum = av_score(profile, committee); break;
          case ThieleFamily::CC: out.optimum = cc_score(profile, committee); break;
          case ThieleFamily::PAV: out.optimum = pav_score(profile, committee); break;
          case ThieleFamily::PGeometric:
            out.optimum = pgeometric_score(profile, committee, rule.p);
            break;
        }
        out.winners = {committee};
        out.trace = std::move(trace);
        return out;
      }
      case RuleTag::GreedyMonroe: {
        auto [committee, trace] = greedy_monroe(profile, k);
        MonroeAssignment assignment;
        assignment.assigned.assign(profile.num_voters(), -1);
        int satisfied = 0;
        for (const auto& round : trace.rounds)
          for (VoterId v : round.removed_group) {
            assignment.assigned[v] = round.chosen;
            if (profile.approves(v, round.chosen)) ++satisfied;
          }
        assignment.satisfied_count = satisfied;
        out.optimum = satisfied;
        out.winners = {committee};
        out.assignment = std::move(assignment);
        out.trace = std::move(trace);
        return out;
      }
      default: {
        auto [committee, trace, loads] = seq_phragmen(profile, k);
        out.optimum = loads.max_load();
        out.winners = {committee};
        out.loads = std::move(loads);
        out.trace = std::move(trace);
        return out;
      }
    }
  }

  check_enumeration_budget(m, k, limits);
  switch (rule.tag) {
    case RuleTag::AV: return thiele_winners(profile, k, ThieleWeights::av(k));
    case RuleTag::CC: return thiele_winners(profile, k, ThieleWeights::cc(k));
    case RuleTag::PAV: return thiele_winners(profile, k, ThieleWeights::pav(k));
    case RuleTag::PGeometric:
      return thiele_winners(profile, k, ThieleWeights::pgeometric(k, rule.p));
    case RuleTag::Monroe: return monroe_winners(profile, k);
    case RuleTag::OptPhragmen: return opt_phragmen_winners(profile, k, limits);
    default: throw domain_error("rule '" + rule.name() + "' does not select committees");
  }
}

}  // namespace abc
