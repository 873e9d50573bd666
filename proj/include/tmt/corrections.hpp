#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmt/mask_core.hpp"
#include "tmt/report.hpp"

// Composition calculus for the zero/one position enumerators u_m, v_m.
// Composites like u_m(u_m(n)) differ from 2u_m(n) or 2u_m(n)+1 by a
// correction bit c_m(n) that is itself a digit-XOR against a periodic
// position set C(m):
//
//   C(0) = {},  C(2j) = C(2j-1)  for j >= 1,  and for odd m with K = K(m)
//   C(m) mod 2^K = {2^K - 2} union (C(m - 2^(K-1)) restricted to [0, 2^(K-1)-2)).
//
// Odd m admits a closed membership test, q in C(m) iff (q+2) & m == 0.
// The constructor builds the set both ways and insists they agree.

namespace tmt {

struct CorrectionSet {
  unsigned source_mask = 0;
  unsigned period = 1;
  std::vector<unsigned> residues;  // strictly increasing, in [0, period)

  bool contains(std::uint64_t q) const;
  std::uint64_t pattern_word() const;
};

CorrectionSet correction_set(unsigned m);

// c_m(n) = XOR of binary digits of n at positions in C(m).
bit correction_bit(unsigned m, std::uint64_t n);

// gamma_{m,m'}(n) = a_m(4n) xor a_{m'}(2n), the cross-level correction.
bit cross_correction(unsigned m, unsigned m_prime, std::uint64_t n);

// All four composition identities (parity-dependent shape) plus the sum law
// u_m(n) + v_m(n) = 4n + 1, for n in [0, n_max).
CheckReport verify_composition(unsigned m, std::uint64_t n_max);

// Cross-level composites u_m(u_{m'}(n)) etc. For odd m the same-level
// correction c_m applies unchanged; for even m >= 2 the correction is
// gamma_{m,m'}. m = 0 is handled by the even-case formulas as well, which
// goes beyond the stated theorem, so those reports carry a note.
CheckReport verify_cross(unsigned m, unsigned m_prime, std::uint64_t n_max);

// For m = 2^k - 1 the correction collapses to a single digit position:
// c_m(n) = a_m(n >> (2^k - 2)).
CheckReport mersenne_correction_check(unsigned k, std::uint64_t n_max);

// a_3(floor(n/4)) xor a_5(n) xor a_7(n) = a_7(floor(n/64)).
CheckReport equivalence_m7_check(std::uint64_t n_max);

}  // namespace tmt
