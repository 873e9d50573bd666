#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmt {

struct IdentityViolation {
  std::string identity;
  std::uint64_t n;
  std::uint64_t lhs, rhs;
};

// Outcome of an identity sweep. Violations are collected exhaustively so a
// failure report pins down every bad index, not just the first.
struct CheckReport {
  std::string check;
  std::uint64_t range = 0;  // n swept over [0, range)
  std::vector<IdentityViolation> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
};

// Thrown when a sweep would exceed its point budget or a profiler hits its
// prefix cap without stabilizing. The CLI maps this to its own exit code.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepOptions {
  std::uint64_t budget = std::uint64_t{1} << 26;  // max points per sweep
  unsigned threads = 1;
};

}  // namespace tmt
