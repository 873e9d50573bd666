#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmt/bigint.hpp"
#include "tmt/mask_core.hpp"
#include "tmt/report.hpp"

// Equal sums of like powers from tower levels. Splitting [0, B(m)^L) by
// a_m gives two classes whose k-th power sums agree for every k up to
// s_m * L - 1 and disagree at s_m * L; the degree is exactly the number of
// selected digit positions inside the interval's digit range, minus one.
// Variants: several masks at once (classes indexed by bit vectors), digit
// bases d > 2 (classes mod d), and the M2 word.
//
// All sums are exact big integers. Every verifier checks the promised
// equalities AND hunts for the inequality one degree higher; sharpness is
// part of the verdict, never assumed.

namespace tmt {

struct PowerSumTable {
  std::uint64_t interval_length = 0;
  unsigned classes = 0;
  int degree_max = 0;
  std::vector<std::vector<bigint>> sums;  // sums[c][k], k = 0 .. degree_max
};

struct PartitionSpec {
  enum class Kind { single, multi, base_d, m2_word };
  Kind kind = Kind::single;
  unsigned base = 2;               // digit base d
  std::vector<unsigned> masks;     // one mask, or several distinct ones for multi
  unsigned digits = 0;             // digit positions spanned by the interval
  unsigned block_exponent = 0;     // L in the block-based statements (0 if not used)

  static PartitionSpec single(unsigned m, unsigned L);
  static PartitionSpec multi(std::vector<unsigned> masks, unsigned L);
  static PartitionSpec based(unsigned d, unsigned m, unsigned L);         // digits = 2^K * L
  static PartitionSpec based_digits(unsigned d, unsigned m, unsigned M);  // digits = M
  static PartitionSpec m2_word(unsigned L);

  std::uint64_t interval_length() const;  // base^digits, or 2^L for multi/m2
  unsigned num_classes() const;
  unsigned class_of(std::uint64_t n) const;
  int expected_degree() const;
  std::string describe() const;
};

PowerSumTable power_sums(const PartitionSpec& spec, int degree_max,
                         const SweepOptions& opts = {});

struct PteVerdict {
  std::string partition;
  std::uint64_t interval_length = 0;
  unsigned classes = 0;
  int expected_degree = 0;
  int equal_through = -1;     // highest degree with all class sums equal so far
  bool sharp = false;         // inequality witnessed at expected_degree + 1
  bool sharpness_required = true;
  std::string witness;        // the witnessing pair at expected_degree + 1
  PowerSumTable table;

  bool ok() const {
    return equal_through >= expected_degree && (sharp || !sharpness_required);
  }
};

// Two classes by a_m over [0, B(m)^L).
PteVerdict pte_verify(unsigned m, unsigned L, const SweepOptions& opts = {});

// Number of selected positions of mask m among digit positions [0, M).
std::uint64_t vanishing_order(unsigned m, std::uint64_t M);

// Guaranteed common degree for several masks at once over [0, 2^L):
// min over nonempty subsets of the symmetric-difference density, scaled by
// L, minus one. Requires distinct masks and L divisible by the largest
// selection period. Sharpness at this degree is not part of the statement.
int multi_degree(const std::vector<unsigned>& masks, unsigned L);

PteVerdict multi_pte_verify(const std::vector<unsigned>& masks, unsigned L,
                            const SweepOptions& opts = {});

// Base-d analogue: classes are the selected digit sums mod d over d^digits
// points. The L form spans 2^K(m) * L digits; the digit form takes any M.
PteVerdict pte_d_verify(unsigned d, unsigned m, unsigned L, const SweepOptions& opts = {});
PteVerdict pte_d_verify_digits(unsigned d, unsigned m, unsigned M,
                               const SweepOptions& opts = {});

// M2 classes over [0, 2^L).
PteVerdict m2_pte_verify(unsigned L, const SweepOptions& opts = {});

// Base-d digit sum mod d, and the positional enumerators
// alpha_{j,d}(n) = d n + ((j - t_d(n)) mod d).
unsigned digit_sum_mod(unsigned d, std::uint64_t n);
std::uint64_t alpha(unsigned d, unsigned j, std::uint64_t n);

// alpha_{j,d} lands in class j and composes by offset subtraction:
// alpha_j(alpha_i(n)) = d * alpha_i(n) + ((j - i) mod d).
CheckReport alpha_compose_check(unsigned d, std::uint64_t n_max);

}  // namespace tmt
