#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "abc/types.hpp"

namespace abc {

// Native profile format: line 1 "m n", then n lines of space-separated
// 0-based approved candidate indices (a blank line is an empty ballot).
ApprovalProfile read_profile(std::istream& in);
ApprovalProfile read_profile_file(const std::string& path);
std::string write_profile(const ApprovalProfile& profile);

// A strict (possibly truncated) ranking with a vote count.
struct RankedBallot {
  int multiplicity = 1;
  std::vector<CandidateId> ranking;  // 0-based, top first
};

struct RankedProfile {
  int num_candidates = 0;
  std::vector<RankedBallot> ballots;
};

// PrefLib election files: '#' metadata lines, ballot lines
// "multiplicity: c1,c2,..." with 1-based candidates.  Legacy headers (a
// candidate-count line, name lines, and a count summary) are also accepted,
// as are legacy comma-separated ballot lines.  Ties (brace groups) are
// rejected.
RankedProfile parse_preflib(std::istream& in);
RankedProfile parse_preflib_file(const std::string& path);
std::string serialize_preflib(const RankedProfile& ranked);

// Voters approve the top min(i, ballot length) ranked candidates;
// multiplicities expand into that many identical approval ballots.
ApprovalProfile top_i_approvals(const RankedProfile& ranked, int i);

}  // namespace abc
