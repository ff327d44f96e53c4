#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "abc/errors.hpp"

namespace abc {

using CandidateId = int;
using VoterId = int;

// Exact arithmetic everywhere scores, loads, and ratios are computed.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text);
// Fixed-point decimal rendering with `digits` places, round half up.
std::string decimal_string(const Rational& r, int digits = 12);
std::string rational_string(const Rational& r);  // "num/den", lowest terms

// Dense bitset over [0, size).  Ballot/committee intersections are the inner
// loop of every score, so this stays allocation-free on the hot paths.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int size) : size_(size), blocks_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(int i) const { return (blocks_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void unset(int i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { std::fill(blocks_.begin(), blocks_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto b : blocks_) c += std::popcount(b);
    return c;
  }

  int and_count(const IndexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) c += std::popcount(blocks_[i] & o.blocks_[i]);
    return c;
  }

  bool intersects(const IndexSet& o) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & o.blocks_[i]) return true;
    return false;
  }

  bool is_subset_of(const IndexSet& o) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~o.blocks_[i]) return false;
    return true;
  }

  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
    return *this;
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
    return *this;
  }

  bool operator==(const IndexSet&) const = default;
  auto operator<=>(const IndexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t w = 0; w < blocks_.size(); ++w) {
      std::uint64_t b = blocks_[w];
      while (b) {
        f(static_cast<int>(w * 64 + std::countr_zero(b)));
        b &= b - 1;
      }
    }
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

// A size-k set of candidates, kept sorted.
class Committee {
 public:
  Committee() = default;
  explicit Committee(std::vector<CandidateId> members);

  const std::vector<CandidateId>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(CandidateId c) const;
  // Bitmask over [0, num_candidates); throws domain_error on out-of-range ids.
  IndexSet mask(int num_candidates) const;
  std::string to_string() const;  // "{0,2,5}"

  bool operator==(const Committee&) const = default;
  auto operator<=>(const Committee&) const = default;

 private:
  std::vector<CandidateId> members_;
};

// Immutable approval election: n voters' approval sets over m candidates.
// Empty ballots are legal and contribute nothing to any score.
class ApprovalProfile {
 public:
  ApprovalProfile(int num_candidates, const std::vector<std::vector<CandidateId>>& approvals);

  int num_candidates() const { return num_candidates_; }
  int num_voters() const { return static_cast<int>(ballots_.size()); }
  const IndexSet& ballot(VoterId i) const { return ballots_[i]; }
  // N(c) as a voter mask; precomputed at construction.
  const IndexSet& approver_set(CandidateId c) const { return approver_sets_[c]; }
  int approval_count(CandidateId c) const { return approval_counts_[c]; }
  bool approves(VoterId i, CandidateId c) const { return ballots_[i].test(c); }

  void require_candidate(CandidateId c) const;
  void require_voter(VoterId i) const;
  void require_committee(const Committee& w) const;

 private:
  int num_candidates_;
  std::vector<IndexSet> ballots_;
  std::vector<IndexSet> approver_sets_;
  std::vector<int> approval_counts_;
};

std::vector<VoterId> approvers(const ApprovalProfile& profile, CandidateId c);

// N(X): voters approving at least one member of X.
IndexSet covered_mask(const ApprovalProfile& profile, const std::vector<CandidateId>& x);
std::vector<VoterId> covered_voters(const ApprovalProfile& profile,
                                    const std::vector<CandidateId>& x);

BigInt binomial(int m, int k);

// Streams all C(m,k) committees in lexicographic order.
class CommitteeEnumerator {
 public:
  CommitteeEnumerator(int m, int k);
  // Returns false once exhausted; `members` is valid until the next call.
  bool next(const std::vector<CandidateId>*& members);

 private:
  int m_, k_;
  bool started_ = false, done_ = false;
  std::vector<CandidateId> current_;
};

std::vector<Committee> all_committees(int m, int k);

}  // namespace abc
