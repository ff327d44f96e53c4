#include "abc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "abc/io.hpp"
#include "abc/random.hpp"

namespace abc {

std::vector<RuleId> default_rule_list() {
  return {
      {RuleTag::AV},          {RuleTag::CC},
      {RuleTag::SeqCC},       {RuleTag::PAV},
      {RuleTag::SeqPAV},      {RuleTag::SeqPhragmen},
      {RuleTag::Monroe},      {RuleTag::PGeometric, Rational(3, 2)},
      {RuleTag::PGeometric, Rational(2)}, {RuleTag::PGeometric, Rational(5)},
  };
}

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    auto eq = text.find('=');
    if (eq == std::string::npos) throw parse_error(line_no, "expected key=value");
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    try {
      if (key == "dataset") {
        if (value == "uniform") config.dataset = ExperimentConfig::Dataset::Uniform;
        else if (value == "preflib") config.dataset = ExperimentConfig::Dataset::Preflib;
        else throw param_error("dataset must be uniform or preflib");
      } else if (key == "profiles") config.num_profiles = std::stoi(value);
      else if (key == "candidates") config.num_candidates = std::stoi(value);
      else if (key == "voters") config.num_voters = std::stoi(value);
      else if (key == "ballot_min") config.ballot_min = std::stoi(value);
      else if (key == "ballot_max") config.ballot_max = std::stoi(value);
      else if (key == "seed") config.seed = std::stoull(value);
      else if (key == "ks") {
        config.committee_sizes.clear();
        for (const auto& item : split_list(value)) config.committee_sizes.push_back(std::stoi(item));
      } else if (key == "rules") {
        config.rules.clear();
        for (const auto& item : split_list(value)) config.rules.push_back(RuleId::parse(item));
      } else if (key == "filter") config.filter_threshold = parse_rational(value);
      else if (key == "budget") config.limits.max_committees = std::stoll(value);
      else if (key == "threads") config.threads = std::stoi(value);
      else if (key == "preflib")
        for (const auto& item : split_list(value)) config.preflib_paths.push_back(item);
      else if (key == "csv") config.csv_path = value;
      else if (key == "summary") config.summary_path = value;
      else throw param_error("unknown config key '" + key + "'");
    } catch (const parse_error&) {
      throw;
    } catch (const param_error& e) {
      throw parse_error(line_no, e.what());
    } catch (const std::exception& e) {
      throw parse_error(line_no, "bad value for '" + key + "': " + e.what());
    }
  }
  if (config.committee_sizes.empty()) throw param_error("config needs at least one k");
  if (config.filter_threshold <= 0 || config.filter_threshold > 1)
    throw param_error("filter threshold must be in (0, 1]");
  if (config.rules.empty()) config.rules = default_rule_list();
  return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open config '" + path + "'");
  return parse_config(in);
}

namespace {

// One enumeration pass collecting AV and CC optima and winner sets.
struct ExactOptima {
  long long av_best = 0, cc_best = 0;
  std::vector<Committee> av_winners, cc_winners;
};

ExactOptima compute_optima(const ApprovalProfile& profile, int k,
                           const EnumerationLimits& limits) {
  check_enumeration_budget(profile.num_candidates(), k, limits);
  ExactOptima out;
  CommitteeEnumerator it(profile.num_candidates(), k);
  const std::vector<CandidateId>* members;
  IndexSet covered(profile.num_voters());
  while (it.next(members)) {
    long long av = 0;
    for (CandidateId c : *members) av += profile.approval_count(c);
    covered.clear();
    for (CandidateId c : *members) covered |= profile.approver_set(c);
    long long cc = covered.count();
    if (av > out.av_best) {
      out.av_best = av;
      out.av_winners.clear();
    }
    if (av == out.av_best) out.av_winners.emplace_back(*members);
    if (cc > out.cc_best) {
      out.cc_best = cc;
      out.cc_winners.clear();
    }
    if (cc == out.cc_best) out.cc_winners.emplace_back(*members);
  }
  if (out.av_best == 0)
    throw degenerate_profile_error("no voter approves any candidate");
  return out;
}

long long min_score(const ApprovalProfile& profile, const std::vector<Committee>& committees,
                    bool av) {
  long long worst = -1;
  for (const auto& w : committees) {
    long long s;
    if (av) {
      s = 0;
      for (CandidateId c : w.members()) s += profile.approval_count(c);
    } else {
      IndexSet covered(profile.num_voters());
      for (CandidateId c : w.members()) covered |= profile.approver_set(c);
      s = covered.count();
    }
    if (worst < 0 || s < worst) worst = s;
  }
  return worst;
}

struct Instance {
  std::string id;
  ApprovalProfile profile;
  int k;
};

struct InstanceResult {
  std::vector<ExperimentRow> rows;
  std::vector<std::string> log;
  bool kept = false;
};

InstanceResult process_instance(const Instance& inst, const ExperimentConfig& config) {
  InstanceResult result;
  ExactOptima optima;
  try {
    optima = compute_optima(inst.profile, inst.k, config.limits);
  } catch (const degenerate_profile_error& e) {
    result.log.push_back(inst.id + ": filtered (degenerate: " + e.what() + ")");
    return result;
  } catch (const budget_error& e) {
    result.log.push_back(inst.id + ": skipped (" + e.what() + ")");
    return result;
  }
  if (optima.cc_best == 0) {
    result.log.push_back(inst.id + ": filtered (degenerate: zero coverage)");
    return result;
  }

  Rational av_of_cc(min_score(inst.profile, optima.cc_winners, true), optima.av_best);
  Rational cc_of_av(min_score(inst.profile, optima.av_winners, false), optima.cc_best);
  if (av_of_cc > config.filter_threshold || cc_of_av > config.filter_threshold) {
    result.log.push_back(inst.id + ": filtered (compromise exists: av(cc)=" +
                         decimal_string(av_of_cc, 3) + " cc(av)=" + decimal_string(cc_of_av, 3) +
                         ")");
    return result;
  }

  result.kept = true;
  for (const RuleId& rule : config.rules) {
    try {
      std::vector<Committee> winner_set;
      if (rule.tag == RuleTag::AV) winner_set = optima.av_winners;
      else if (rule.tag == RuleTag::CC) winner_set = optima.cc_winners;
      else winner_set = winners(rule, inst.profile, inst.k, config.limits).winners;
      ExperimentRow row;
      row.instance = inst.id;
      row.rule = rule;
      row.k = inst.k;
      row.av_ratio = Rational(min_score(inst.profile, winner_set, true), optima.av_best);
      row.cc_ratio = Rational(min_score(inst.profile, winner_set, false), optima.cc_best);
      result.rows.push_back(std::move(row));
    } catch (const std::runtime_error& e) {
      result.log.push_back(inst.id + "/" + rule.name() + ": skipped (" + e.what() + ")");
    }
  }
  return result;
}

std::string basename_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace

bool compromise_filter(const ApprovalProfile& profile, int k, const Rational& threshold,
                       const EnumerationLimits& limits) {
  ExactOptima optima = compute_optima(profile, k, limits);
  if (optima.cc_best == 0) return false;
  Rational av_of_cc(min_score(profile, optima.cc_winners, true), optima.av_best);
  Rational cc_of_av(min_score(profile, optima.av_winners, false), optima.cc_best);
  return av_of_cc <= threshold && cc_of_av <= threshold;
}

Rational quantile(const std::vector<Rational>& sorted_values, const Rational& q) {
  if (sorted_values.empty()) throw domain_error("quantile of empty sample");
  Rational h = q * static_cast<int>(sorted_values.size() - 1);
  BigInt idx_big = numerator(h) / denominator(h);
  auto idx = idx_big.convert_to<std::size_t>();
  Rational frac = h - Rational(idx_big);
  if (idx + 1 >= sorted_values.size()) return sorted_values.back();
  return sorted_values[idx] + (sorted_values[idx + 1] - sorted_values[idx]) * frac;
}

const SummaryRow* ExperimentResult::summary(const RuleId& rule, const std::string& ratio) const {
  for (const auto& row : summaries)
    if (row.rule == rule && row.ratio == ratio) return &row;
  return nullptr;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  std::vector<Instance> instances;
  if (config.dataset == ExperimentConfig::Dataset::Uniform) {
    for (int i = 0; i < config.num_profiles; ++i) {
      ApprovalProfile profile =
          gen_uniform_profile(config.seed + static_cast<std::uint64_t>(i), config.num_candidates,
                              config.num_voters, config.ballot_min, config.ballot_max);
      for (int k : config.committee_sizes)
        instances.push_back({"uniform-" + std::to_string(i), profile, k});
    }
  } else {
    if (config.preflib_paths.empty()) throw param_error("preflib dataset needs preflib= paths");
    for (const auto& path : config.preflib_paths) {
      RankedProfile ranked = parse_preflib_file(path);
      for (int k : config.committee_sizes)
        for (int i = 1; i <= k - 1; ++i) {
          ApprovalProfile profile = top_i_approvals(ranked, i);
          instances.push_back(
              {basename_of(path) + "-k" + std::to_string(k) + "-top" + std::to_string(i), profile,
               k});
        }
    }
  }

  ExperimentResult result;
  result.total_instances = static_cast<int>(instances.size());

  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::max(1, std::min(threads, static_cast<int>(instances.size())));
  std::vector<InstanceResult> per_instance(instances.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      per_instance[i] = process_instance(instances[i], config);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& r : per_instance) {
    if (r.kept) ++result.kept_instances;
    for (auto& row : r.rows) result.rows.push_back(std::move(row));
    for (auto& line : r.log) result.log.push_back(std::move(line));
  }

  // Per-rule boxplot statistics over the kept instances.
  for (const RuleId& rule : config.rules) {
    for (const std::string& which : {"av", "cc"}) {
      std::vector<Rational> values;
      for (const auto& row : result.rows)
        if (row.rule == rule) values.push_back(which == "av" ? row.av_ratio : row.cc_ratio);
      if (values.empty()) continue;
      std::sort(values.begin(), values.end());
      SummaryRow s;
      s.rule = rule;
      s.ratio = which;
      s.count = static_cast<int>(values.size());
      s.min = values.front();
      s.q1 = quantile(values, Rational(1, 4));
      s.median = quantile(values, Rational(1, 2));
      s.q3 = quantile(values, Rational(3, 4));
      s.max = values.back();
      result.summaries.push_back(std::move(s));
    }
  }
  return result;
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "instance,rule,k,av_ratio_exact,av_ratio,cc_ratio_exact,cc_ratio\n";
  for (const auto& row : rows)
    out << row.instance << ',' << row.rule.name() << ',' << row.k << ','
        << rational_string(row.av_ratio) << ',' << decimal_string(row.av_ratio, 12) << ','
        << rational_string(row.cc_ratio) << ',' << decimal_string(row.cc_ratio, 12) << '\n';
  return out.str();
}

std::string to_summary_text(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "rule,ratio,count,min,q1,median,q3,max\n";
  for (const auto& row : rows)
    out << row.rule.name() << ',' << row.ratio << ',' << row.count << ','
        << decimal_string(row.min, 12) << ',' << decimal_string(row.q1, 12) << ','
        << decimal_string(row.median, 12) << ',' << decimal_string(row.q3, 12) << ','
        << decimal_string(row.max, 12) << '\n';
  return out.str();
}

}  // namespace abc
