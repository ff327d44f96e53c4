#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abc/scoring.hpp"
#include "abc/sequential.hpp"
#include "abc/types.hpp"

namespace abc {

enum class RuleTag {
  AV,
  CC,
  PAV,
  PGeometric,
  Monroe,
  OptPhragmen,
  SeqAV,
  SeqCC,
  SeqPAV,
  SeqPGeometric,
  GreedyMonroe,
  SeqPhragmen,
  LowerQuota,  // synthetic: guarantee bounds for lower-quota rules, not a votable rule
};

struct RuleId {
  RuleTag tag = RuleTag::AV;
  Rational p = 1;  // geometric parameter, meaningful for (Seq)PGeometric only

  // Accepts av, cc, pav, monroe, opt-phragmen, seq-av, seq-cc, seq-pav,
  // seq-phragmen, greedy-monroe, geom:<p>, seq-geom:<p>, lower-quota.
  static RuleId parse(const std::string& name);
  std::string name() const;
  bool is_sequential() const;

  bool operator==(const RuleId&) const = default;
  auto operator<=>(const RuleId&) const = default;
};

struct EnumerationLimits {
  long long max_committees = 10'000'000;
};

// The full tied-optimum set of an irresolute rule, or the single committee
// built by a sequential rule.
struct RuleOutcome {
  std::vector<Committee> winners;  // lexicographically sorted, never empty
  // The rule's objective value: a score, or the min-max voter load for
  // optimal Phragmen / the final max load for sequential Phragmen.
  Rational optimum;
  std::optional<MonroeAssignment> assignment;  // Monroe / greedy Monroe witness
  std::optional<LoadVector> loads;             // Phragmen-family witness
  std::optional<SeqTrace> trace;               // sequential rules only
};

RuleOutcome winners(const RuleId& rule, const ApprovalProfile& profile, int k,
                    const EnumerationLimits& limits = {});

// Min-max voter load of a fixed committee under an optimal simultaneous load
// distribution; equals max over nonempty subsets W' of |W'| / |N(W')|.
Rational optimal_phragmen_load(const ApprovalProfile& profile, const Committee& w);

RuleOutcome opt_phragmen_winners(const ApprovalProfile& profile, int k,
                                 const EnumerationLimits& limits = {});

// Throws budget_error unless C(m,k) fits the cap; returns the count.
long long check_enumeration_budget(int m, int k, const EnumerationLimits& limits);

}  // namespace abc
