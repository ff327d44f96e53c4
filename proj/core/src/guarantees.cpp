#include "abc/guarantees.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abc {

double lambert_w(double z) {
  if (z < 0) throw domain_error("lambert_w: principal branch needs z >= 0");
  if (z == 0) return 0;
  long double w = std::log1p(static_cast<long double>(z));
  for (int i = 0; i < 64; ++i) {
    long double ew = std::exp(w);
    long double f = w * ew - z;
    // Halley step.
    long double step = f / (ew * (w + 1) - (w + 2) * f / (2 * w + 2));
    w -= step;
    if (std::fabs(step) <= 1e-18L * std::max<long double>(1, std::fabs(w))) break;
  }
  return static_cast<double>(w);
}

namespace {

int isqrt(int k) {
  int s = static_cast<int>(std::sqrt(static_cast<double>(k)));
  while (s * s > k) --s;
  while ((s + 1) * (s + 1) <= k) ++s;
  return s;
}

GuaranteeBounds clamped(double lower, double upper) {
  return {std::clamp(lower, 0.0, 1.0), std::clamp(upper, 0.0, 1.0)};
}

}  // namespace

TableBounds table1_bounds(RuleTag rule, int k, std::optional<double> p) {
  if (k < 1) throw domain_error("bounds need k >= 1");
  const double dk = k;
  const double sk = std::sqrt(dk);
  const int fsk = isqrt(k);
  const double prop_av_upper = 2.0 / fsk - 1.0 / dk;  // any lower-quota rule

  switch (rule) {
    case RuleTag::AV: return {clamped(1, 1), clamped(1 / dk, 1 / dk)};
    case RuleTag::CC: return {clamped(1 / dk, 1 / dk), clamped(1, 1)};
    case RuleTag::SeqCC:
      return {clamped(1 / dk, 1 / dk),
              clamped(1 - 1 / std::exp(1.0), 1 - std::pow(1 - 1 / dk, dk))};
    case RuleTag::PAV:
      return {clamped(1 / (2 + sk), prop_av_upper), clamped(0.5, 0.5 + 1 / (4 * dk - 2))};
    case RuleTag::SeqPAV:
      return {clamped(1 / (2 * sk), prop_av_upper),
              clamped(1 / (std::log(dk) + 2), 0.5 + 1 / (4 * dk - 2))};
    case RuleTag::Monroe:
    case RuleTag::GreedyMonroe:
      return {clamped(1 / dk, 1 / dk),
              clamped(0.5, k == 1 ? 1.0 : 0.5 + 1 / (dk - 1))};
    case RuleTag::SeqPhragmen:
      return {clamped(1 / (5 * sk + 1), prop_av_upper), clamped(0.5, 0.5 + 1 / (4 * dk - 2))};
    case RuleTag::PGeometric: {
      if (!p) throw domain_error("geometric bounds need p");
      if (*p < 1) throw domain_error("geometric bounds need p >= 1");
      const double z = dk * std::log(*p);
      if (z == 0) return {clamped(1, 1), clamped(0, *p / (*p + dk / (dk + 2)))};  // p=1 is av
      const double w = lambert_w(z);
      return {clamped(w / (z + w), 1 / dk + 2 * w / z),
              clamped((*p - 1) / *p, *p / (*p + dk / (dk + 2)))};
    }
    case RuleTag::LowerQuota:
      return {clamped(0, prop_av_upper), clamped(0, 0.75 + 3 / (8 * dk - 4))};
    default:
      throw domain_error("no tabulated guarantee bounds for rule tag");
  }
}

namespace {

enum class Objective { Av, Cc };

long long integer_score(const ApprovalProfile& profile, const std::vector<CandidateId>& members,
                        Objective obj) {
  if (obj == Objective::Av) {
    long long s = 0;
    for (CandidateId c : members) s += profile.approval_count(c);
    return s;
  }
  IndexSet covered(profile.num_voters());
  for (CandidateId c : members) covered |= profile.approver_set(c);
  return covered.count();
}

Rational score_ratio(const ApprovalProfile& profile, int k, const std::vector<Committee>& winners,
                     Objective obj, const EnumerationLimits& limits) {
  if (winners.empty()) throw domain_error("ratio needs a nonempty winner set");
  for (const auto& w : winners) {
    profile.require_committee(w);
    if (w.size() != k) throw domain_error("winner size differs from k");
  }
  check_enumeration_budget(profile.num_candidates(), k, limits);

  long long best = 0;
  CommitteeEnumerator it(profile.num_candidates(), k);
  const std::vector<CandidateId>* members;
  while (it.next(members)) best = std::max(best, integer_score(profile, *members, obj));
  if (best == 0)
    throw degenerate_profile_error("all committees score zero; ratio undefined");

  long long worst_winner = std::numeric_limits<long long>::max();
  for (const auto& w : winners)
    worst_winner = std::min(worst_winner, integer_score(profile, w.members(), obj));
  return Rational(worst_winner, best);
}

}  // namespace

Rational av_ratio(const ApprovalProfile& profile, int k, const std::vector<Committee>& winners,
                  const EnumerationLimits& limits) {
  return score_ratio(profile, k, winners, Objective::Av, limits);
}

Rational cc_ratio(const ApprovalProfile& profile, int k, const std::vector<Committee>& winners,
                  const EnumerationLimits& limits) {
  return score_ratio(profile, k, winners, Objective::Cc, limits);
}

RatioReport rule_ratios(const ApprovalProfile& profile, int k, const RuleId& rule,
                        const EnumerationLimits& limits) {
  RuleOutcome outcome = winners(rule, profile, k, limits);
  RatioReport report;
  report.rule = rule;
  report.k = k;
  report.av_ratio = av_ratio(profile, k, outcome.winners, limits);
  report.cc_ratio = cc_ratio(profile, k, outcome.winners, limits);
  return report;
}

}  // namespace abc
