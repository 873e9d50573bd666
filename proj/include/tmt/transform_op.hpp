#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tmt/mask_core.hpp"

// The transform T takes a binary seed sequence and produces the unique tau
// with tau(0) = 0 whose values at the seed's zero positions copy tau and at
// the seed's one positions flip it:
//
//   tau(v(n)) = tau(n)      v(n) = position of the n-th zero of the seed
//   tau(u(n)) = 1 - tau(n)  u(n) = position of the n-th one
//
// Both enumerators move strictly forward (v(n) >= n, u(n) > n for n >= 1),
// so a single left-to-right pass fills the prefix. Iterating T on Thue-Morse
// walks up the tower: T(a_m) = a_{m+1}.

namespace tmt {

struct SequenceOracle {
  std::string name;
  std::function<bit(std::uint64_t)> eval;

  // Admissible seeds start 0, 1. Checked here, eagerly; the "both values
  // occur infinitely often" part of the definition is undecidable from a
  // prefix and is approximated per run inside transform_prefix.
  SequenceOracle(std::string name_, std::function<bit(std::uint64_t)> eval_);
};

SequenceOracle tower_oracle(unsigned m);
// Oracle over a stored word; indexing past the end throws.
SequenceOracle word_oracle(word w, std::string name);
// Seed file: '0'/'1' characters, one per line or one unbroken run,
// whitespace ignored, anything else rejected.
SequenceOracle file_oracle(const std::string& path);

struct SeqMismatch {
  std::uint64_t index;
  bit expected;  // closed form
  bit got;       // iterated transform
};

struct TransformReport {
  unsigned mask = 0;
  std::size_t length = 0;
  std::vector<SeqMismatch> mismatches;  // all of them, not just the first
  std::string note;

  bool ok() const { return mismatches.empty(); }
};

// First n letters of T(seed). Throws "degenerate seed" when the consumed
// prefix is constant beyond index 1 (n >= 4 with seed constant on [2, n)),
// the per-run stand-in for the infinitely-often requirement.
word transform_prefix(const SequenceOracle& seed, std::size_t n);
word transform_prefix(const word& seed);  // same length as the input

// T applied m times to the Thue-Morse prefix. Needs n >= 2 when m >= 1.
word iterate_tower_prefix(unsigned m, std::size_t n);

// Iterated transform vs. the digit-selection closed form on [0, n).
TransformReport verify_closed_form(unsigned m, std::size_t n);

}  // namespace tmt
