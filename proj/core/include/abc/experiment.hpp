#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "abc/guarantees.hpp"
#include "abc/rules.hpp"
#include "abc/types.hpp"

namespace abc {

struct ExperimentConfig {
  enum class Dataset { Uniform, Preflib };
  Dataset dataset = Dataset::Uniform;
  std::vector<std::string> preflib_paths;

  // Uniform dataset shape.
  int num_profiles = 500;
  int num_candidates = 20;
  int num_voters = 50;
  int ballot_min = 2;
  int ballot_max = 5;
  std::uint64_t seed = 1;

  std::vector<int> committee_sizes = {5};
  std::vector<RuleId> rules;  // empty = default rule list
  Rational filter_threshold = Rational(9, 10);
  EnumerationLimits limits;
  int threads = 0;  // 0 = hardware concurrency
  std::string csv_path;
  std::string summary_path;
};

// av, cc, seq-cc, pav, seq-pav, seq-phragmen, monroe, geom:1.5, geom:2, geom:5.
std::vector<RuleId> default_rule_list();

// Flat key=value text; '#' starts a comment.  Unknown keys are errors.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

// Keep only profiles with no near-perfect compromise: the AV-ratio of the CC
// winners and the CC-ratio of the AV winners must both be <= threshold.
bool compromise_filter(const ApprovalProfile& profile, int k, const Rational& threshold,
                       const EnumerationLimits& limits = {});

struct ExperimentRow {
  std::string instance;
  RuleId rule;
  int k = 0;
  Rational av_ratio;
  Rational cc_ratio;
};

struct SummaryRow {
  RuleId rule;
  std::string ratio;  // "av" or "cc"
  int count = 0;
  Rational min, q1, median, q3, max;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::vector<SummaryRow> summaries;
  int total_instances = 0;
  int kept_instances = 0;
  std::vector<std::string> log;  // filtered / skipped instances with reasons

  const SummaryRow* summary(const RuleId& rule, const std::string& ratio) const;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// Header: instance,rule,k,av_ratio_exact,av_ratio,cc_ratio_exact,cc_ratio
std::string to_csv(const std::vector<ExperimentRow>& rows);
std::string to_summary_text(const std::vector<SummaryRow>& rows);

// Exact linear-interpolation quantile of pre-sorted values, q in [0,1].
Rational quantile(const std::vector<Rational>& sorted_values, const Rational& q);

}  // namespace abc
