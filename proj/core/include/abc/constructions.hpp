#pragma once

#include <string>
#include <utility>

#include "abc/rules.hpp"
#include "abc/types.hpp"

namespace abc {

// Deterministic worst-case profile families.  Each family pins one rule's
// AV- or CC-ratio at a closed-form value (or drives it toward a bound as the
// scale parameter x grows).
enum class Family {
  AvOfCc,        // AV-ratio of CC winners: (x+k-1)/(xk)
  CcOfAv,        // CC-ratio of AV winners: (x+1)/(kx+1)
  LowerQuotaAv,  // best AV-ratio any lower-quota committee can reach
  LowerQuotaCc,  // best CC-ratio any lower-quota committee can reach (even k)
  MonroeAv,      // AV-ratio of greedy Monroe: (x+1)/(xk)
  MonroeCc,      // CC-ratio of Monroe winners (see note in generator)
  PavCc,         // CC-ratio of PAV winners: 2k/(4k-2)
  PgeomAv,       // AV-ratio of the p-geometric rule, scale-dependent
  PgeomCc,       // CC-ratio of the p-geometric rule: p/(p+1) for even k
};

Family parse_family(const std::string& name);
std::string family_name(Family family);

struct ConstructionSpec {
  Family family;
  int k = 0;
  int x = 0;
  Rational p = 1;

  enum class Target { AvRatio, CcRatio } target = Target::AvRatio;
  RuleId subject;           // whose winners the target ratio is taken over
  Rational expected_ratio;  // the advertised closed-form value
  bool expected_exact = true;  // false: discretization noise, compare within 5%
};

// Throws param_error when a divisibility/size requirement is violated.
std::pair<ApprovalProfile, ConstructionSpec> gen(Family family, int k, int x,
                                                 const Rational& p = 1);

// Best achievable target score over committees satisfying lower quota,
// divided by the unconstrained optimum.  Used by the LowerQuota* families.
Rational lower_quota_best_ratio(const ApprovalProfile& profile, int k,
                                ConstructionSpec::Target target,
                                const EnumerationLimits& limits = {});

// The three hand-built profiles on which named rules elect a dominated
// committee.  `which` is 1, 2, or 3.
struct EfficiencyFixture {
  ApprovalProfile profile;
  int k;
  Committee bad;        // elected, yet dominated
  Committee dominator;  // dominates `bad`
};

EfficiencyFixture efficiency_fixture(int which);

}  // namespace abc
