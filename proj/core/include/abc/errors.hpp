#pragma once

#include <stdexcept>
#include <string>

namespace abc {

// Invalid indices, sizes, or rule parameters.  CLI exit code 2.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator or config parameter violates a stated constraint.  Exit code 2.
class param_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input file could not be parsed.  Exit code 3.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Enumeration work exceeds the configured cap.  Exit code 4.
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& required, long long budget)
      : std::runtime_error("enumeration budget exceeded: need " + required +
                           " committees, budget is " + std::to_string(budget)) {}
};

// No feasible load distribution or committee exists (zero-approver candidates).
class infeasible_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// All scores of interest are zero; ratios are undefined.
class degenerate_profile_error : public domain_error {
 public:
  using domain_error::domain_error;
};

}  // namespace abc
