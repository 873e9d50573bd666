#include "tmt/mask_core.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace tmt {

LevelParams level_params(unsigned m) {
  if (m > max_mask)
    throw std::invalid_argument("mask too large: " + std::to_string(m) +
                                " (selection period would exceed one machine word)");
  unsigned k = 1;
  while ((m + 1u) > (1u << k)) ++k;
  unsigned period = 1u << k;
  unsigned selected = 1u << (k - std::popcount(m));
  return LevelParams{m, k, period, selected, std::uint64_t{1} << period};
}

bool PeriodicBitSet::contains(std::uint64_t q) const {
  unsigned r = unsigned(q % period);
  for (unsigned x : residues)
    if (x == r) return true;
  return false;
}

std::uint64_t PeriodicBitSet::pattern_word() const {
  std::uint64_t pat = 0;
  for (unsigned r : residues) pat |= std::uint64_t{1} << r;
  for (unsigned shift = period; shift < 64; shift <<= 1) pat |= pat << shift;
  return pat;
}

PeriodicBitSet mask_set(unsigned m) {
  LevelParams lp = level_params(m);
  PeriodicBitSet s;
  s.period = lp.period;
  for (unsigned p = 0; p < lp.period; ++p)
    if ((p & m) == 0) s.residues.push_back(p);
  return s;
}

namespace {

const std::array<std::uint64_t, max_mask + 1>& selection_patterns() {
  static const std::array<std::uint64_t, max_mask + 1> table = [] {
    std::array<std::uint64_t, max_mask + 1> t{};
    for (unsigned m = 0; m <= max_mask; ++m) t[m] = mask_set(m).pattern_word();
    return t;
  }();
  return table;
}

}  // namespace

bit tower_bit(unsigned m, std::uint64_t n) {
  if (m > max_mask)
    throw std::invalid_argument("mask too large: " + std::to_string(m));
  return bit(std::popcount(n & selection_patterns()[m]) & 1);
}

word tower_prefix(unsigned m, std::size_t len) {
  level_params(m);  // range check
  std::uint64_t pat = selection_patterns()[m];
  word w(len);
  for (std::size_t n = 0; n < len; ++n) w[n] = bit(std::popcount(n & pat) & 1);
  return w;
}

std::uint64_t evil(unsigned m, std::uint64_t n) {
  return 2 * n + tower_bit(m, 2 * n);
}

std::uint64_t odious(unsigned m, std::uint64_t n) {
  return 2 * n + 1 - tower_bit(m, 2 * n);
}

std::string word_to_string(const word& w) {
  std::string s(w.size(), '0');
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = char('0' + w[i]);
  return s;
}

}  // namespace tmt
