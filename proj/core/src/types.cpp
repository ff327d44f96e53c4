#include "abc/types.hpp"

#include <algorithm>
#include <sstream>

namespace abc {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw param_error("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw param_error("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string frac = text.substr(dot + 1);
    std::string whole = text.substr(0, dot);
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = BigInt(whole) * scale;
    BigInt f = frac.empty() ? BigInt(0) : BigInt(frac);
    num += neg ? -f : f;
    return Rational(num, scale);
  } catch (const std::runtime_error& e) {
    throw param_error("cannot parse rational '" + text + "'");
  }
}

std::string decimal_string(const Rational& r, int digits) {
  BigInt num = numerator(r), den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = (num * scale * 2 + den) / (den * 2);  // round half up
  BigInt whole = scaled / scale, frac = scaled % scale;
  std::ostringstream out;
  if (neg && scaled != 0) out << '-';
  out << whole;
  if (digits > 0) {
    std::string f = frac.str();
    out << '.' << std::string(digits - f.size(), '0') << f;
  }
  return out.str();
}

std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Committee::Committee(std::vector<CandidateId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw domain_error("committee members must be distinct");
  if (!members_.empty() && members_.front() < 0)
    throw domain_error("negative candidate index in committee");
}

bool Committee::contains(CandidateId c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

IndexSet Committee::mask(int num_candidates) const {
  IndexSet m(num_candidates);
  for (CandidateId c : members_) {
    if (c < 0 || c >= num_candidates)
      throw domain_error("candidate index " + std::to_string(c) + " out of range [0, " +
                         std::to_string(num_candidates) + ")");
    m.set(c);
  }
  return m;
}

std::string Committee::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

ApprovalProfile::ApprovalProfile(int num_candidates,
                                 const std::vector<std::vector<CandidateId>>& approvals)
    : num_candidates_(num_candidates) {
  if (num_candidates < 1) throw domain_error("profile needs at least one candidate");
  if (approvals.empty()) throw domain_error("profile needs at least one voter");
  const int n = static_cast<int>(approvals.size());
  ballots_.reserve(n);
  for (const auto& a : approvals) {
    IndexSet ballot(num_candidates);
    for (CandidateId c : a) {
      if (c < 0 || c >= num_candidates)
        throw domain_error("approval of candidate " + std::to_string(c) + " out of range [0, " +
                           std::to_string(num_candidates) + ")");
      ballot.set(c);
    }
    ballots_.push_back(std::move(ballot));
  }
  approver_sets_.assign(num_candidates, IndexSet(n));
  approval_counts_.assign(num_candidates, 0);
  for (int i = 0; i < n; ++i)
    ballots_[i].for_each([&](int c) {
      approver_sets_[c].set(i);
      ++approval_counts_[c];
    });
}

void ApprovalProfile::require_candidate(CandidateId c) const {
  if (c < 0 || c >= num_candidates_)
    throw domain_error("candidate index " + std::to_string(c) + " out of range [0, " +
                       std::to_string(num_candidates_) + ")");
}

void ApprovalProfile::require_voter(VoterId i) const {
  if (i < 0 || i >= num_voters())
    throw domain_error("voter index " + std::to_string(i) + " out of range [0, " +
                       std::to_string(num_voters()) + ")");
}

void ApprovalProfile::require_committee(const Committee& w) const {
  for (CandidateId c : w.members()) require_candidate(c);
}

std::vector<VoterId> approvers(const ApprovalProfile& profile, CandidateId c) {
  profile.require_candidate(c);
  return profile.approver_set(c).to_vector();
}

IndexSet covered_mask(const ApprovalProfile& profile, const std::vector<CandidateId>& x) {
  IndexSet covered(profile.num_voters());
  for (CandidateId c : x) {
    profile.require_candidate(c);
    covered |= profile.approver_set(c);
  }
  return covered;
}

std::vector<VoterId> covered_voters(const ApprovalProfile& profile,
                                    const std::vector<CandidateId>& x) {
  return covered_mask(profile, x).to_vector();
}

BigInt binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= m - k + i;
    r /= i;
  }
  return r;
}

CommitteeEnumerator::CommitteeEnumerator(int m, int k) : m_(m), k_(k) {
  if (k < 0 || k > m) throw domain_error("committee size k=" + std::to_string(k) +
                                         " must satisfy 0 <= k <= m=" + std::to_string(m));
  current_.resize(k);
  for (int i = 0; i < k; ++i) current_[i] = i;
}

bool CommitteeEnumerator::next(const std::vector<CandidateId>*& members) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    members = &current_;
    return true;
  }
  int i = k_ - 1;
  while (i >= 0 && current_[i] == m_ - k_ + i) --i;
  if (i < 0) {
    done_ = true;
    return false;
  }
  ++current_[i];
  for (int j = i + 1; j < k_; ++j) current_[j] = current_[j - 1] + 1;
  members = &current_;
  return true;
}

std::vector<Committee> all_committees(int m, int k) {
  std::vector<Committee> out;
  CommitteeEnumerator it(m, k);
  const std::vector<CandidateId>* members;
  while (it.next(members)) out.emplace_back(*members);
  return out;
}

}  // namespace abc
