#include "abc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace abc {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

int parse_int(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("trailing junk");
    return value;
  } catch (const std::exception&) {
    throw parse_error(line, "expected an integer, got '" + token + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

}  // namespace

ApprovalProfile read_profile(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error(1, "missing header line 'm n'");
  std::istringstream header(line);
  int m = 0, n = 0;
  if (!(header >> m >> n)) throw parse_error(1, "header must be 'm n'");
  std::string extra;
  if (header >> extra) throw parse_error(1, "header must be exactly 'm n'");
  if (m < 1 || n < 1) throw parse_error(1, "m and n must be positive");

  std::vector<std::vector<CandidateId>> ballots;
  ballots.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw parse_error(2 + i, "expected " + std::to_string(n) +
                                                              " ballot lines, file ended early");
    std::istringstream row(line);
    std::vector<CandidateId> ballot;
    int c;
    while (row >> c) {
      if (c < 0 || c >= m)
        throw parse_error(2 + i, "candidate index " + std::to_string(c) + " out of range");
      ballot.push_back(c);
    }
    if (!row.eof()) throw parse_error(2 + i, "non-integer token in ballot");
    ballots.push_back(std::move(ballot));
  }
  return ApprovalProfile(m, ballots);
}

ApprovalProfile read_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  return read_profile(in);
}

std::string write_profile(const ApprovalProfile& profile) {
  std::ostringstream out;
  out << profile.num_candidates() << ' ' << profile.num_voters() << '\n';
  for (int i = 0; i < profile.num_voters(); ++i) {
    bool first = true;
    profile.ballot(i).for_each([&](int c) {
      if (!first) out << ' ';
      out << c;
      first = false;
    });
    out << '\n';
  }
  return out.str();
}

namespace {

RankedBallot parse_ballot_line(const std::string& line, int line_no, int num_candidates,
                               bool legacy_commas) {
  if (line.find('{') != std::string::npos || line.find('}') != std::string::npos)
    throw parse_error(line_no, "tied positions (brace groups) are not supported");

  std::string mult_text, ranking_text;
  auto colon = line.find(':');
  if (colon != std::string::npos) {
    mult_text = trim(line.substr(0, colon));
    ranking_text = trim(line.substr(colon + 1));
  } else if (legacy_commas) {
    auto comma = line.find(',');
    if (comma == std::string::npos) throw parse_error(line_no, "malformed ballot line");
    mult_text = trim(line.substr(0, comma));
    ranking_text = trim(line.substr(comma + 1));
  } else {
    throw parse_error(line_no, "malformed ballot line (expected 'multiplicity: c1,c2,...')");
  }

  RankedBallot ballot;
  ballot.multiplicity = parse_int(mult_text, line_no);
  if (ballot.multiplicity < 1) throw parse_error(line_no, "multiplicity must be >= 1");
  if (!ranking_text.empty()) {
    for (const std::string& token : split(ranking_text, ',')) {
      if (token.empty()) throw parse_error(line_no, "empty ranking entry");
      int c = parse_int(token, line_no);
      if (c < 1 || (num_candidates > 0 && c > num_candidates))
        throw parse_error(line_no, "candidate " + std::to_string(c) + " out of range");
      ballot.ranking.push_back(c - 1);
    }
  }
  auto sorted = ballot.ranking;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw parse_error(line_no, "repeated candidate in ranking");
  return ballot;
}

}  // namespace

RankedProfile parse_preflib(std::istream& in) {
  RankedProfile out;
  std::string line;
  int line_no = 0;
  int stated_candidates = 0;
  bool legacy = false;
  int legacy_names_left = 0;
  bool legacy_summary_pending = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      std::string upper = text;
      std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
      auto tag = upper.find("NUMBER ALTERNATIVES");
      if (tag != std::string::npos) {
        auto colon = text.find(':', tag);
        if (colon != std::string::npos)
          stated_candidates = parse_int(trim(text.substr(colon + 1)), line_no);
      }
      continue;
    }
    if (legacy_names_left > 0) {
      --legacy_names_left;
      if (legacy_names_left == 0) legacy_summary_pending = true;
      continue;
    }
    if (legacy_summary_pending) {
      legacy_summary_pending = false;  // "n, sum_votes, unique_orders"
      continue;
    }
    // A bare integer before any ballots is a legacy candidate-count header.
    if (out.ballots.empty() && !legacy && text.find_first_of(",:") == std::string::npos) {
      stated_candidates = parse_int(text, line_no);
      legacy = true;
      legacy_names_left = stated_candidates;
      continue;
    }
    out.ballots.push_back(parse_ballot_line(text, line_no, stated_candidates, legacy));
  }

  if (out.ballots.empty()) throw parse_error(line_no, "no ballots");
  int max_seen = 0;
  for (const auto& b : out.ballots)
    for (CandidateId c : b.ranking) max_seen = std::max(max_seen, c + 1);
  out.num_candidates = std::max(stated_candidates, max_seen);
  if (out.num_candidates < 1) throw parse_error(line_no, "no candidates");
  return out;
}

RankedProfile parse_preflib_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  return parse_preflib(in);
}

std::string serialize_preflib(const RankedProfile& ranked) {
  std::ostringstream out;
  out << "# NUMBER ALTERNATIVES: " << ranked.num_candidates << '\n';
  for (const auto& b : ranked.ballots) {
    out << b.multiplicity << ": ";
    for (std::size_t i = 0; i < b.ranking.size(); ++i) {
      if (i) out << ',';
      out << b.ranking[i] + 1;
    }
    out << '\n';
  }
  return out.str();
}

ApprovalProfile top_i_approvals(const RankedProfile& ranked, int i) {
  if (i < 1) throw domain_error("top-i conversion needs i >= 1");
  std::vector<std::vector<CandidateId>> ballots;
  for (const auto& b : ranked.ballots) {
    std::vector<CandidateId> approved(
        b.ranking.begin(),
        b.ranking.begin() + std::min<std::size_t>(i, b.ranking.size()));
    for (int copy = 0; copy < b.multiplicity; ++copy) ballots.push_back(approved);
  }
  return ApprovalProfile(ranked.num_candidates, ballots);
}

}  // namespace abc
