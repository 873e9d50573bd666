#include "tmt/transform_op.hpp"

#include <fstream>
#include <memory>
#include <stdexcept>
#include <utility>

namespace tmt {

SequenceOracle::SequenceOracle(std::string name_, std::function<bit(std::uint64_t)> eval_)
    : name(std::move(name_)), eval(std::move(eval_)) {
  if (!eval) throw std::invalid_argument("sequence oracle without evaluator");
  if (eval(0) != 0 || eval(1) != 1)
    throw std::invalid_argument("invalid seed for " + name + ": must start 0, 1");
}

SequenceOracle tower_oracle(unsigned m) {
  level_params(m);  // range check now, not on first eval
  return SequenceOracle("level " + std::to_string(m),
                        [m](std::uint64_t n) { return tower_bit(m, n); });
}

SequenceOracle word_oracle(word w, std::string name) {
  auto stored = std::make_shared<word>(std::move(w));
  return SequenceOracle(std::move(name), [stored](std::uint64_t n) {
    if (n >= stored->size())
      throw std::out_of_range("seed word exhausted at index " + std::to_string(n));
    return (*stored)[n];
  });
}

SequenceOracle file_oracle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open seed file: " + path);
  word w;
  char ch;
  while (in.get(ch)) {
    if (ch == '0' || ch == '1')
      w.push_back(bit(ch - '0'));
    else if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r')
      throw std::invalid_argument(std::string("bad character '") + ch + "' in seed file " + path);
  }
  return word_oracle(std::move(w), path);
}

namespace {

// One forward pass. tau(0) = 0; a seed zero at k copies the next unread
// tau value, a seed one flips it. Both cursors trail k, so every read
// hits an index already written.
word forward_pass(const std::function<bit(std::uint64_t)>& seed, std::size_t n) {
  word tau(n);
  std::size_t zeros_seen = 0, ones_seen = 0;
  bit tail_value = 0;
  bool tail_constant = true;
  for (std::size_t k = 0; k < n; ++k) {
    bit s = seed(k);
    if (s > 1) throw std::invalid_argument("seed value not binary at index " + std::to_string(k));
    if (k == 2) tail_value = s;
    if (k > 2 && s != tail_value) tail_constant = false;
    if (s == 0)
      tau[k] = tau[zeros_seen++];
    else
      tau[k] = bit(1 - tau[ones_seen++]);
  }
  if (n >= 4 && tail_constant)
    throw std::invalid_argument("degenerate seed: constant beyond index 1");
  return tau;
}

}  // namespace

word transform_prefix(const SequenceOracle& seed, std::size_t n) {
  return forward_pass(seed.eval, n);
}

word transform_prefix(const word& seed) {
  if (seed.size() >= 1 && seed[0] != 0)
    throw std::invalid_argument("invalid seed: must start 0, 1");
  if (seed.size() >= 2 && seed[1] != 1)
    throw std::invalid_argument("invalid seed: must start 0, 1");
  return forward_pass([&seed](std::uint64_t k) { return seed[k]; }, seed.size());
}

word iterate_tower_prefix(unsigned m, std::size_t n) {
  level_params(m);
  if (m >= 1 && n < 2)
    throw std::invalid_argument("iterated transform needs at least two letters");
  word w = tower_prefix(0, n);
  for (unsigned step = 0; step < m; ++step) w = transform_prefix(w);
  return w;
}

TransformReport verify_closed_form(unsigned m, std::size_t n) {
  TransformReport rep;
  rep.mask = m;
  rep.length = n;
  rep.note = "seed admissibility checked on the consumed range only";
  word iterated = iterate_tower_prefix(m, n);
  word closed = tower_prefix(m, n);
  for (std::size_t i = 0; i < n; ++i)
    if (iterated[i] != closed[i]) rep.mismatches.push_back({i, closed[i], iterated[i]});
  return rep;
}

}  // namespace tmt
