#include "abc/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "abc/axioms.hpp"
#include "abc/guarantees.hpp"
#include "abc/scoring.hpp"

namespace abc {

Family parse_family(const std::string& name) {
  if (name == "av-of-cc") return Family::AvOfCc;
  if (name == "cc-of-av") return Family::CcOfAv;
  if (name == "lower-quota-av") return Family::LowerQuotaAv;
  if (name == "lower-quota-cc") return Family::LowerQuotaCc;
  if (name == "monroe-av") return Family::MonroeAv;
  if (name == "monroe-cc") return Family::MonroeCc;
  if (name == "pav-cc") return Family::PavCc;
  if (name == "pgeom-av") return Family::PgeomAv;
  if (name == "pgeom-cc") return Family::PgeomCc;
  throw param_error("unknown construction family '" + name + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::AvOfCc: return "av-of-cc";
    case Family::CcOfAv: return "cc-of-av";
    case Family::LowerQuotaAv: return "lower-quota-av";
    case Family::LowerQuotaCc: return "lower-quota-cc";
    case Family::MonroeAv: return "monroe-av";
    case Family::MonroeCc: return "monroe-cc";
    case Family::PavCc: return "pav-cc";
    case Family::PgeomAv: return "pgeom-av";
    case Family::PgeomCc: return "pgeom-cc";
  }
  return "?";
}

namespace {

int isqrt(int k) {
  int s = static_cast<int>(std::sqrt(static_cast<double>(k)));
  while (s * s > k) --s;
  while ((s + 1) * (s + 1) <= k) ++s;
  return s;
}

void require(bool ok, const std::string& constraint) {
  if (!ok) throw param_error("construction parameter violates: " + constraint);
}

using Ballots = std::vector<std::vector<CandidateId>>;

void add_group(Ballots& ballots, int count, std::vector<CandidateId> approved) {
  for (int i = 0; i < count; ++i) ballots.push_back(approved);
}

std::vector<CandidateId> range_set(int from, int count) {
  std::vector<CandidateId> out(count);
  for (int i = 0; i < count; ++i) out[i] = from + i;
  return out;
}

}  // namespace

std::pair<ApprovalProfile, ConstructionSpec> gen(Family family, int k, int x, const Rational& p) {
  require(k >= 1, "k >= 1");
  require(x >= 1, "x >= 1");
  ConstructionSpec spec;
  spec.family = family;
  spec.k = k;
  spec.x = x;
  spec.p = p;

  switch (family) {
    case Family::AvOfCc: {
      // x voters share the first k candidates; k lone voters each approve one
      // of the remaining k.  CC winners trade score-x seats for coverage.
      Ballots ballots;
      add_group(ballots, x, range_set(0, k));
      for (int j = 0; j < k; ++j) add_group(ballots, 1, {k + j});
      spec.target = ConstructionSpec::Target::AvRatio;
      spec.subject = {RuleTag::CC};
      spec.expected_ratio = Rational(x + k - 1, static_cast<long long>(x) * k);
      return {ApprovalProfile(2 * k, ballots), spec};
    }

    case Family::CcOfAv: {
      // k disjoint voter groups with their own k-candidate slates; the first
      // group is one voter larger, so AV takes that whole slate.
      Ballots ballots;
      add_group(ballots, x + 1, range_set(0, k));
      for (int g = 1; g < k; ++g) add_group(ballots, x, range_set(g * k, k));
      spec.target = ConstructionSpec::Target::CcRatio;
      spec.subject = {RuleTag::AV};
      spec.expected_ratio = Rational(x + 1, static_cast<long long>(k) * x + 1);
      return {ApprovalProfile(k * k, ballots), spec};
    }

    case Family::LowerQuotaAv: {
      // floor(sqrt(k)) groups back a k-candidate slate, the rest are lone
      // parties; lower quota pins the lone parties' seats.
      const int s = isqrt(k);
      Ballots ballots;
      add_group(ballots, s * x, range_set(0, k));
      for (int g = s; g < k; ++g) add_group(ballots, x, {k + (g - s)});
      spec.target = ConstructionSpec::Target::AvRatio;
      spec.subject = {RuleTag::LowerQuota};
      spec.expected_ratio = Rational(k - s + s * s, static_cast<long long>(k) * s);
      return {ApprovalProfile(k + (k - s), ballots), spec};
    }

    case Family::LowerQuotaCc: {
      require(k % 2 == 0, "k must be even");
      Ballots ballots;
      add_group(ballots, k * x, range_set(0, k));
      for (int g = 0; g < k; ++g) add_group(ballots, x, {k + g});
      spec.target = ConstructionSpec::Target::CcRatio;
      spec.subject = {RuleTag::LowerQuota};
      spec.expected_ratio = Rational(3 * k, 4 * k - 2);
      return {ApprovalProfile(2 * k, ballots), spec};
    }

    case Family::MonroeAv: {
      require(k >= 2, "k >= 2");
      // Candidates k..2k-1 form a bloc approved alongside each decoy c_i;
      // one lone voter per decoy makes the decoys fill quotas exactly.
      Ballots ballots;
      std::vector<CandidateId> bloc = range_set(k, k);
      for (int i = 0; i < k; ++i) {
        std::vector<CandidateId> with_decoy = bloc;
        with_decoy.push_back(i);
        add_group(ballots, x, with_decoy);
        add_group(ballots, 1, {i});
      }
      spec.target = ConstructionSpec::Target::AvRatio;
      spec.subject = {RuleTag::GreedyMonroe};
      spec.expected_ratio = Rational(x + 1, static_cast<long long>(x) * k);
      return {ApprovalProfile(2 * k, ballots), spec};
    }

    case Family::MonroeCc: {
      require(k >= 3, "k >= 3");
      // 2k lone parties of size x plus one candidate approved by the first k
      // parties.  Advertised ratio (k+1)/(2k-2); note the true optimum
      // committee {c_{k}, ..., c_{2k-2}, c_{2k}} covers (2k-1) of the 2k
      // groups, so brute force yields (k+1)/(2k-1) instead.
      Ballots ballots;
      for (int g = 0; g < 2 * k; ++g) {
        std::vector<CandidateId> approved = {g};
        if (g < k) approved.push_back(2 * k);
        add_group(ballots, x, approved);
      }
      spec.target = ConstructionSpec::Target::CcRatio;
      spec.subject = {RuleTag::Monroe};
      spec.expected_ratio = Rational(k + 1, 2 * k - 2);
      return {ApprovalProfile(2 * k + 1, ballots), spec};
    }

    case Family::PavCc: {
      // Half the voters back a full slate; k lone parties of size x hold the
      // rest.  PAV keeps the slate, coverage wants the lone parties.
      Ballots ballots;
      add_group(ballots, k * x, range_set(0, k));
      for (int g = 0; g < k; ++g) add_group(ballots, x, {k + g});
      spec.target = ConstructionSpec::Target::CcRatio;
      spec.subject = {RuleTag::PAV};
      spec.expected_ratio = Rational(2 * k, 4 * k - 2);
      return {ApprovalProfile(2 * k, ballots), spec};
    }

    case Family::PgeomAv: {
      require(p > 1, "p > 1");
      const double z_real = [&] {
        double lg = k * std::log(p.convert_to<double>());
        return lg / lambert_w(lg);
      }();
      const long long nb = static_cast<long long>(std::floor(x * z_real));
      require(nb >= 1, "floor(x*z) >= 1");
      Ballots ballots;
      add_group(ballots, static_cast<int>(nb), range_set(0, k));
      for (int j = 0; j < k; ++j) add_group(ballots, x, {k + j});

      // Winning committees take j slate members and k-j lone candidates;
      // score depends only on j, so the argmax over j is exhaustive.
      ThieleWeights weights = ThieleWeights::pgeometric(k, p);
      Rational best_score = -1;
      Rational worst_winner_av;
      for (int j = 0; j <= k; ++j) {
        Rational score =
            Rational(nb) * weights.cumulative[j] + Rational(k - j) * x * weights.cumulative[1];
        Rational av = Rational(j) * nb + Rational(k - j) * x;
        if (score > best_score) {
          best_score = score;
          worst_winner_av = av;
        } else if (score == best_score) {
          worst_winner_av = std::min(worst_winner_av, av);
        }
      }
      spec.target = ConstructionSpec::Target::AvRatio;
      spec.subject = {RuleTag::PGeometric, p};
      spec.expected_ratio = worst_winner_av / (Rational(k) * nb);
      spec.expected_exact = true;  // derived from the emitted integers
      return {ApprovalProfile(2 * k, ballots), spec};
    }

    case Family::PgeomCc: {
      require(p > 1, "p > 1");
      require(k >= 2, "k >= 2");
      Rational px = p * x;
      require(denominator(px) == 1, "p*x must be an integer");
      const int half = k / 2;
      const int num_pairs = (k % 2 == 0) ? half : half + 1;
      const int num_lone = half;
      const int px_int = numerator(px).convert_to<int>();
      Ballots ballots;
      for (int i = 0; i < num_pairs; ++i) add_group(ballots, px_int, {2 * i, 2 * i + 1});
      for (int j = 0; j < num_lone; ++j) add_group(ballots, x, {2 * num_pairs + j});
      spec.target = ConstructionSpec::Target::CcRatio;
      spec.subject = {RuleTag::PGeometric, p};
      // Winners keep one member per pair; the worst of them covers only the
      // pair groups: num_pairs*px of n = num_pairs*px + num_lone*x voters.
      spec.expected_ratio = Rational(num_pairs) * px /
                            (Rational(num_pairs) * px + Rational(num_lone) * x);
      return {ApprovalProfile(2 * num_pairs + num_lone, ballots), spec};
    }
  }
  throw param_error("unhandled construction family");
}

Rational lower_quota_best_ratio(const ApprovalProfile& profile, int k,
                                ConstructionSpec::Target target,
                                const EnumerationLimits& limits) {
  check_enumeration_budget(profile.num_candidates(), k, limits);
  auto score = [&](const Committee& w) {
    return target == ConstructionSpec::Target::AvRatio ? av_score(profile, w)
                                                       : cc_score(profile, w);
  };
  CommitteeEnumerator it(profile.num_candidates(), k);
  const std::vector<CandidateId>* members;
  Rational best_all = 0, best_lq = -1;
  while (it.next(members)) {
    Committee w(*members);
    Rational s = score(w);
    best_all = std::max(best_all, s);
    if (lower_quota_holds(profile, k, w)) best_lq = std::max(best_lq, s);
  }
  if (best_all == 0) throw degenerate_profile_error("all committees score zero");
  if (best_lq < 0) throw infeasible_error("no committee satisfies lower quota");
  return best_lq / best_all;
}

namespace {

// Approver ranges are written 1-based to mirror the worked examples.
Ballots from_candidate_ranges(int num_candidates, int num_voters,
                              const std::vector<std::vector<std::pair<int, int>>>& ranges) {
  Ballots ballots(num_voters);
  for (int c = 0; c < num_candidates; ++c)
    for (auto [from, to] : ranges[c])
      for (int v = from; v <= to; ++v) ballots[v - 1].push_back(c);
  return ballots;
}

}  // namespace

EfficiencyFixture efficiency_fixture(int which) {
  switch (which) {
    case 1: {
      auto ballots = from_candidate_ranges(
          5, 36,
          {{{1, 20}}, {{11, 28}}, {{1, 10}, {29, 36}}, {{21, 36}}, {{1, 19}}});
      return {ApprovalProfile(5, ballots), 3, Committee({0, 3, 4}), Committee({0, 1, 2})};
    }
    case 2: {
      auto ballots = from_candidate_ranges(
          4, 24, {{{3, 22}}, {{1, 2}, {23, 24}}, {{2, 12}}, {{13, 23}}});
      return {ApprovalProfile(4, ballots), 2, Committee({2, 3}), Committee({0, 1})};
    }
    case 3: {
      auto ballots = from_candidate_ranges(
          4, 20, {{{2, 10}}, {{11, 19}}, {{6, 15}}, {{2, 4}, {16, 19}}});
      return {ApprovalProfile(4, ballots), 2, Committee({2, 3}), Committee({0, 1})};
    }
    default: throw domain_error("efficiency fixture index must be 1, 2, or 3");
  }
}

}  // namespace abc
