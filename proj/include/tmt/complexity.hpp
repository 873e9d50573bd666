#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tmt/bigint.hpp"
#include "tmt/mask_core.hpp"
#include "tmt/report.hpp"

// Factor complexity p(n), the number of distinct length-n windows, for tower
// levels. Mersenne masks m = 2^k - 1 admit an exact piecewise-linear formula
// driven by the block size B = 2^(2^k): growth phases of slope 4 alternate
// with plateau phases of slope 2, phase lengths in ratio B - 1.
//
// Three independent routes are kept separate on purpose:
//   brute     window counting over a streamed prefix
//   formula   the closed piecewise form
//   desub     counting factors of the derived (first-difference) word by
//             recursive desubstitution, then p(n) = 2 q(n-1)
// Cross-validating them is the point; none is ever rewired to call another.

namespace tmt {

struct ComplexityProfile {
  std::string source;
  std::vector<std::uint64_t> values;  // values[i] = p(i+1)
  std::size_t prefix_used = 0;
  unsigned doublings = 0;             // doubling rounds until two stable comparisons
  // n where p decreased or grew by more than 4 (never expected; reported, not hidden)
  std::vector<unsigned> contract_violations;

  std::uint64_t p(unsigned n) const;  // 1-based
};

struct BruteOptions {
  std::size_t initial_prefix = 0;              // 0 means 64 * n_max
  std::size_t prefix_cap = std::size_t{1} << 24;
};

// Streamed word: returns the prefix of a requested length.
using WordSource = std::function<word(std::size_t)>;

// Counts distinct windows of each length 1..n_max over growing prefixes,
// doubling until the whole profile survives two consecutive doublings.
// Throws BudgetExceeded when the cap is hit first. Windows are packed into
// machine words; n_max is capped at 256 letters (four words).
ComplexityProfile factor_complexity_brute(const WordSource& source, unsigned n_max,
                                          const BruteOptions& opts = {},
                                          const std::string& source_name = "word");

ComplexityProfile level_complexity_brute(unsigned m, unsigned n_max,
                                         const BruteOptions& opts = {});

// p(n) for level m = 2^k - 1 from the closed piecewise form. Exact for
// every n; arbitrary precision because block powers B^j outgrow 64 bits.
bigint mersenne_formula(unsigned k, std::uint64_t n);

struct PiecewisePiece {
  std::uint64_t lo, hi;  // inclusive n range
  unsigned slope;        // 2 or 4
  bigint intercept;      // p(n) = slope * n + intercept
};

// The pieces covering 1..n_max, in order.
std::vector<PiecewisePiece> mersenne_pieces(unsigned k, std::uint64_t n_max);

// First-difference word of level m: delta(n) = a_m(n) xor a_m(n+1).
word derived_prefix(unsigned m, std::size_t len);

// Factor count q(L) of the derived word of a Mersenne level, by memoized
// desubstitution against sigma(1) = 1^(B-1) 0, sigma(0) = 1^B.
class DesubCounter {
 public:
  explicit DesubCounter(unsigned k);
  bigint q(std::uint64_t len);

 private:
  std::uint64_t block_;
  std::unordered_map<std::uint64_t, bigint> memo_;
};

bigint q_desub(unsigned k, std::uint64_t len);

// p_{a_m}(n) = 2 q(n-1) for n >= 2, both sides brute-forced independently.
CheckReport verify_reduction(unsigned k, unsigned n_max, const BruteOptions& opts = {});

// The derived word equals the fixed point of sigma starting from 1.
CheckReport substitution_check(unsigned k, std::size_t len);

// a_m(q B + r) = a_m(q) xor (r mod 2): every aligned block is (01)^(B/2)
// or its complement. Full r sweep per block, so keep k small.
CheckReport block_structure_check(unsigned k, std::uint64_t q_max);

// n >= 3 where the slope p(n) - p(n-1) changes.
std::vector<unsigned> profile_breakpoints(const ComplexityProfile& profile);

}  // namespace tmt
