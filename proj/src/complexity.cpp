#include "tmt/complexity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace tmt {

std::uint64_t ComplexityProfile::p(unsigned n) const {
  if (n < 1 || n > values.size())
    throw std::out_of_range("profile has no value for n = " + std::to_string(n));
  return values[n - 1];
}

namespace {

constexpr unsigned max_window = 256;

struct PackedWindow {
  std::array<std::uint64_t, 4> w{};
  bool operator==(const PackedWindow&) const = default;
};

struct WindowHash {
  std::size_t operator()(const PackedWindow& x) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t v : x.w) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return std::size_t(h);
  }
};

std::vector<std::uint64_t> pack_bits(const word& w) {
  std::vector<std::uint64_t> blocks((w.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) blocks[i / 64] |= std::uint64_t{1} << (i % 64);
  return blocks;
}

// n bits starting at position i, zero-padded to four words
PackedWindow extract(const std::vector<std::uint64_t>& blocks, std::size_t i, unsigned n) {
  PackedWindow out;
  unsigned words = (n + 63) / 64;
  std::size_t j = i / 64, off = i % 64;
  for (unsigned t = 0; t < words; ++t) {
    std::uint64_t lo = blocks[j + t] >> off;
    std::uint64_t hi = (off && j + t + 1 < blocks.size()) ? blocks[j + t + 1] << (64 - off) : 0;
    out.w[t] = lo | hi;
  }
  unsigned tail = n % 64;
  if (tail) out.w[words - 1] &= (std::uint64_t{1} << tail) - 1;
  return out;
}

std::vector<std::uint64_t> profile_of_prefix(const word& prefix, unsigned n_max) {
  std::vector<std::uint64_t> blocks = pack_bits(prefix);
  std::vector<std::uint64_t> p(n_max);
  std::unordered_set<PackedWindow, WindowHash> seen;
  for (unsigned n = 1; n <= n_max; ++n) {
    seen.clear();
    if (prefix.size() >= n)
      for (std::size_t i = 0; i + n <= prefix.size(); ++i) seen.insert(extract(blocks, i, n));
    p[n - 1] = seen.size();
  }
  return p;
}

}  // namespace

ComplexityProfile factor_complexity_brute(const WordSource& source, unsigned n_max,
                                          const BruteOptions& opts,
                                          const std::string& source_name) {
  if (n_max == 0) throw std::invalid_argument("n_max must be positive");
  if (n_max > max_window)
    throw std::invalid_argument("window longer than " + std::to_string(max_window) +
                                " letters does not pack");
  std::size_t len = opts.initial_prefix ? opts.initial_prefix : std::size_t{64} * n_max;
  if (len < std::size_t{2} * n_max) len = std::size_t{2} * n_max;
  if (len > opts.prefix_cap)
    throw BudgetExceeded("initial prefix already exceeds the cap");

  ComplexityProfile prof;
  prof.source = source_name;
  prof.values = profile_of_prefix(source(len), n_max);
  unsigned stable = 0;
  while (stable < 2) {
    if (len > opts.prefix_cap / 2)
      throw BudgetExceeded("factor complexity did not stabilize within prefix cap " +
                           std::to_string(opts.prefix_cap));
    len *= 2;
    ++prof.doublings;
    std::vector<std::uint64_t> next = profile_of_prefix(source(len), n_max);
    if (next == prof.values)
      ++stable;
    else
      stable = 0;
    prof.values = std::move(next);
  }
  prof.prefix_used = len;

  for (unsigned n = 1; n <= n_max; ++n) {
    std::uint64_t prev = (n == 1) ? 1 : prof.values[n - 2];  // p(0) = 1, the empty window
    std::uint64_t cur = prof.values[n - 1];
    if (cur < prev || cur > prev + 4) prof.contract_violations.push_back(n);
  }
  return prof;
}

ComplexityProfile level_complexity_brute(unsigned m, unsigned n_max, const BruteOptions& opts) {
  level_params(m);
  return factor_complexity_brute([m](std::size_t len) { return tower_prefix(m, len); }, n_max,
                                 opts, "level " + std::to_string(m));
}

namespace {

std::uint64_t mersenne_block(unsigned k) {
  if (k < 1 || k > 5)
    throw std::invalid_argument("mersenne complexity needs 1 <= k <= 5");
  return std::uint64_t{1} << (1u << k);
}

}  // namespace

bigint mersenne_formula(unsigned k, std::uint64_t n) {
  std::uint64_t b = mersenne_block(k);
  if (n == 0) return 1;
  if (n <= b + 1) return bigint(2) * n;
  // regime j: B^j + 2 <= n <= B^(j+1) + 1
  bigint bj = b;
  while (bigint(n) > bj * b + 1) bj *= b;
  bigint bj_prev = bj / b;
  if (bigint(n) <= 2 * bj - bj_prev + 1)
    return bigint(4) * n - 2 * (bj - bj_prev + 2);  // growth phase
  return bigint(2) * n + 2 * (bj - 1);              // plateau
}

std::vector<PiecewisePiece> mersenne_pieces(unsigned k, std::uint64_t n_max) {
  std::uint64_t b = mersenne_block(k);
  std::vector<PiecewisePiece> pieces;
  if (n_max == 0) return pieces;
  auto clamp_push = [&](bigint lo, bigint hi, unsigned slope, bigint intercept) {
    if (lo > n_max) return false;
    if (hi > n_max) hi = n_max;
    pieces.push_back(PiecewisePiece{std::uint64_t(lo), std::uint64_t(hi), slope, intercept});
    return true;
  };
  if (!clamp_push(1, bigint(b) + 1, 2, 0)) return pieces;
  for (bigint bj = b;; bj *= b) {
    bigint bj_prev = bj / b;
    if (!clamp_push(bj + 2, 2 * bj - bj_prev + 1, 4, -2 * (bj - bj_prev + 2))) break;
    if (!clamp_push(2 * bj - bj_prev + 2, bj * b + 1, 2, 2 * (bj - 1))) break;
  }
  return pieces;
}

word derived_prefix(unsigned m, std::size_t len) {
  level_params(m);
  word w(len);
  for (std::size_t n = 0; n < len; ++n) w[n] = tower_bit(m, n) ^ tower_bit(m, n + 1);
  return w;
}

DesubCounter::DesubCounter(unsigned k) : block_(mersenne_block(k)) {}

bigint DesubCounter::q(std::uint64_t len) {
  if (len <= block_) return bigint(len) + 1;
  if (len <= 2 * block_ - 2) return bigint(2) * len - block_ + 1;
  auto it = memo_.find(len);
  if (it != memo_.end()) return it->second;
  // every long factor desubstitutes uniquely: length aB + r splits into
  // B - r positions over a sigma-blocks and r positions over a+1 of them
  std::uint64_t a = len / block_, r = len % block_;
  bigint result = bigint(block_ - r) * q(a) + bigint(r) * q(a + 1);
  memo_.emplace(len, result);
  return result;
}

bigint q_desub(unsigned k, std::uint64_t len) { return DesubCounter(k).q(len); }

CheckReport verify_reduction(unsigned k, unsigned n_max, const BruteOptions& opts) {
  unsigned m = (1u << k) - 1;
  CheckReport rep;
  rep.check = "factor count of level " + std::to_string(m) +
              " vs. twice the derived word's count";
  rep.range = n_max;
  ComplexityProfile level = level_complexity_brute(m, n_max, opts);
  ComplexityProfile derived = factor_complexity_brute(
      [m](std::size_t len) { return derived_prefix(m, len); }, n_max, opts,
      "derived of level " + std::to_string(m));
  for (unsigned n = 2; n <= n_max; ++n)
    if (level.p(n) != 2 * derived.p(n - 1))
      rep.violations.push_back({"p=2q", n, level.p(n), 2 * derived.p(n - 1)});
  return rep;
}

CheckReport substitution_check(unsigned k, std::size_t len) {
  std::uint64_t b = mersenne_block(k);
  unsigned m = (1u << k) - 1;
  CheckReport rep;
  rep.check = "derived word of level " + std::to_string(m) + " is the sigma fixed point";
  rep.range = len;

  word fixed{1};
  while (fixed.size() < len) {
    word next;
    next.reserve(fixed.size() * std::size_t(b));
    for (bit x : fixed) {
      if (x) {
        next.insert(next.end(), std::size_t(b - 1), 1);
        next.push_back(0);
      } else {
        next.insert(next.end(), std::size_t(b), 1);
      }
      if (next.size() >= len) break;
    }
    if (next.size() <= fixed.size())
      throw std::logic_error("substitution failed to grow");
    fixed = std::move(next);
  }

  word derived = derived_prefix(m, len);
  for (std::size_t n = 0; n < len; ++n)
    if (fixed[n] != derived[n]) rep.violations.push_back({"sigma", n, fixed[n], derived[n]});
  return rep;
}

CheckReport block_structure_check(unsigned k, std::uint64_t q_max) {
  std::uint64_t b = mersenne_block(k);
  unsigned m = (1u << k) - 1;
  CheckReport rep;
  rep.check = "aligned blocks of level " + std::to_string(m) + " alternate";
  rep.range = q_max;
  for (std::uint64_t q = 0; q < q_max; ++q) {
    bit base = tower_bit(m, q);
    for (std::uint64_t r = 0; r < b; ++r) {
      bit got = tower_bit(m, q * b + r);
      bit want = base ^ bit(r % 2);
      if (got != want) rep.violations.push_back({"block", q * b + r, got, want});
    }
  }
  return rep;
}

std::vector<unsigned> profile_breakpoints(const ComplexityProfile& profile) {
  std::vector<unsigned> out;
  for (unsigned n = 3; n <= profile.values.size(); ++n) {
    std::int64_t d1 = std::int64_t(profile.p(n)) - std::int64_t(profile.p(n - 1));
    std::int64_t d0 = std::int64_t(profile.p(n - 1)) - std::int64_t(profile.p(n - 2));
    if (d1 != d0) out.push_back(n);
  }
  return out;
}

}  // namespace tmt
