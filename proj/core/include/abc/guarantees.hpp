#pragma once

#include <optional>
#include <vector>

#include "abc/rules.hpp"
#include "abc/types.hpp"

namespace abc {

// Principal branch of w * e^w = z for z >= 0, accurate to ~1e-15 relative.
double lambert_w(double z);

struct GuaranteeBounds {
  double lower = 0;
  double upper = 1;
};

struct TableBounds {
  GuaranteeBounds av;
  GuaranteeBounds cc;
};

// Closed-form worst-case guarantee window for a rule at committee size k.
// Uppers are clamped to 1 (a ratio cannot exceed 1).  The geometric row
// needs p; RuleTag::LowerQuota gives the windows any lower-quota rule obeys.
TableBounds table1_bounds(RuleTag rule, int k, std::optional<double> p = std::nullopt);

// Worst winning committee's score divided by the true optimum over all
// size-k committees; exact.
Rational av_ratio(const ApprovalProfile& profile, int k, const std::vector<Committee>& winners,
                  const EnumerationLimits& limits = {});
Rational cc_ratio(const ApprovalProfile& profile, int k, const std::vector<Committee>& winners,
                  const EnumerationLimits& limits = {});

struct RatioReport {
  RuleId rule;
  int k = 0;
  Rational av_ratio;
  Rational cc_ratio;
};

RatioReport rule_ratios(const ApprovalProfile& profile, int k, const RuleId& rule,
                        const EnumerationLimits& limits = {});

}  // namespace abc
