#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Core of the bitmask tower: the m-th level is the binary sequence
//
//   a_m(n) = XOR of the binary digits of n at positions p with p & m == 0.
//
// Level 0 is the Thue-Morse sequence (every digit selected). The selected
// position set S(m) = { p : p & m == 0 } is periodic with period 2^K where
// K = max(1, ceil(log2(m+1))), so each level is determined by one period
// pattern replicated across the word.

namespace tmt {

using bit = std::uint8_t;        // a single letter, 0 or 1
using word = std::vector<bit>;   // finite binary word

// Masks are capped so that the selection period 2^K fits in a machine word;
// with K <= 5 every period divides 64 and one popcount evaluates a level.
inline constexpr unsigned max_mask = 31;

struct LevelParams {
  unsigned mask;            // m
  unsigned k;               // K(m)
  unsigned period;          // 2^K
  unsigned selected;        // s_m = 2^(K - popcount(m)), selected positions per period
  std::uint64_t block;      // B(m) = 2^(2^K), alignment block for balance/automaticity
};

// Throws std::invalid_argument for m > max_mask ("mask too large").
LevelParams level_params(unsigned m);

// A subset of the nonnegative integers given by residues modulo a period
// dividing 64.
struct PeriodicBitSet {
  unsigned period = 1;
  std::vector<unsigned> residues;   // strictly increasing, in [0, period)

  bool contains(std::uint64_t q) const;
  // Residue pattern replicated across all 64 bit positions.
  std::uint64_t pattern_word() const;
};

// S(m) as residues mod 2^K.
PeriodicBitSet mask_set(unsigned m);

// a_m(n). One AND plus popcount against the cached selection pattern.
bit tower_bit(unsigned m, std::uint64_t n);

// First `len` letters of level m.
word tower_prefix(unsigned m, std::size_t len);

// Position of the n-th zero (evil) / n-th one (odious) of level m.
// Pairing law: both equal 2n plus a bit decided by a_m(2n), so they
// partition each pair {2n, 2n+1} and sum to 4n+1.
std::uint64_t evil(unsigned m, std::uint64_t n);
std::uint64_t odious(unsigned m, std::uint64_t n);

std::string word_to_string(const word& w);

}  // namespace tmt
