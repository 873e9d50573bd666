#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmt/bigint.hpp"
#include "tmt/complexity.hpp"
#include "tmt/mask_core.hpp"
#include "tmt/report.hpp"

// Analogues of the digit-sum parity in other numeration systems.
//
// Fibonacci: ftm(n) is the parity of the number of terms in the Zeckendorf
// decomposition of n (indexing F_2 = 1, F_3 = 2, ...). Intervals [0, F_{3r})
// are balanced; the signed first and second moments over them follow exact
// Fibonacci formulas.
//
// M2: the fixed point of a nested binary recurrence, equal to Thue-Morse
// read through a digit filter that zeroes binary positions p = 2, 5 mod 6.

namespace tmt {

std::uint64_t fibonacci(unsigned i);  // F(0) = 0, F(1) = F(2) = 1; i <= 92

struct ZeckendorfRep {
  std::vector<unsigned> support;  // Fibonacci indices >= 2, increasing, no neighbors
};

ZeckendorfRep zeckendorf(std::uint64_t n);
std::uint64_t zeckendorf_value(const ZeckendorfRep& rep);

bit ftm(std::uint64_t n);  // parity of the Zeckendorf term count
word ftm_prefix(std::size_t len);
// Same word by an independent route: W(0) = 0, W(1) = 01,
// W(j+1) = W(j) followed by the complement of W(j-1).
word ftm_prefix_by_recursion(std::size_t len);

struct FibBalanceVerdict {
  unsigned r = 0;
  std::uint64_t interval = 0;  // F_{3r}
  std::uint64_t zeros = 0, ones = 0;
  bool balanced = false;
  // the signed count over [0, F_{L+3}) for L <= 30 follows the period-6
  // pattern 0,-1,-1,0,1,1 via s_L = s_{L-1} - s_{L-2}; checked directly
  // for every L whose interval fits inside [0, F_{3r})
  bool sign_pattern_ok = false;

  bool ok() const { return balanced && sign_pattern_ok; }
};

FibBalanceVerdict fib_balance_check(unsigned r, const SweepOptions& opts = {});

struct FibDefectReport {
  unsigned r = 0;
  int degree = 1;  // which comparison drives ok()
  bigint defect1, predicted1;
  bigint defect2, predicted2;
  bool match1 = false, match2 = false;

  bool ok() const { return degree == 2 ? match2 : match1; }
};

// Signed moments over [0, F_{3r}): defect_k = sum over zeros of n^k minus
// sum over ones. Predictions: (-1)^r (F_{3r+1} - 1)/2 at degree 1 and
// (-1)^r (F_{3r+2}^2 - 2 F_{3r}^2 - 4 F_{3r+1} - 2 F_{3r} + 3)/4 at degree 2.
// One sweep fills both degrees.
FibDefectReport fib_defect(unsigned r, int degree, const SweepOptions& opts = {});

// Prefix-sign polynomials built twice: directly from ftm, and through
// P_L = P_{L-1} - x^{F_{L+2}} P_{L-2} from P_0 = 1 - x, P_1 = 1 - x - x^2.
CheckReport fib_poly_recursion_check(unsigned l_max);

bit m2(std::uint64_t n);  // Thue-Morse of n with digits at p = 2, 5 mod 6 cleared
word m2_prefix(std::size_t len);

// Replays the defining recurrences
//   M2(0) = 0, M2(2n+1) = 1 - M2(2n),
//   M2(4n) = M2(2n + M2(n)), M2(4n+2) = M2(2n + 1 - M2(n))
// bottom-up and compares with the closed form on [0, len).
CheckReport m2_check(std::size_t len);

// The transform applied to ftm. Nothing is asserted about the output; this
// exists to look at it. Results carry the EXPLORATORY label.
struct FtmOrbitResult {
  std::string label;  // "EXPLORATORY"
  word transformed;
  std::uint64_t zeros = 0, ones = 0;
  ComplexityProfile profile;
};

FtmOrbitResult tm_transform_of_ftm(std::size_t len, unsigned profile_max);

}  // namespace tmt
