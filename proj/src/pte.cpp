#include "tmt/pte.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tmt/numeration.hpp"

namespace tmt {

PartitionSpec PartitionSpec::single(unsigned m, unsigned L) {
  if (L < 1) throw std::invalid_argument("power sum partition needs L >= 1");
  LevelParams lp = level_params(m);
  PartitionSpec s;
  s.kind = Kind::single;
  s.masks = {m};
  s.block_exponent = L;
  s.digits = lp.period * L;
  return s;
}

PartitionSpec PartitionSpec::multi(std::vector<unsigned> masks, unsigned L) {
  if (masks.empty()) throw std::invalid_argument("multi partition needs at least one mask");
  std::set<unsigned> distinct(masks.begin(), masks.end());
  if (distinct.size() != masks.size())
    throw std::invalid_argument("multi partition masks must be distinct");
  for (unsigned m : masks) level_params(m);
  PartitionSpec s;
  s.kind = Kind::multi;
  s.masks = std::move(masks);
  s.block_exponent = L;
  s.digits = L;
  return s;
}

PartitionSpec PartitionSpec::based(unsigned d, unsigned m, unsigned L) {
  if (L < 1) throw std::invalid_argument("power sum partition needs L >= 1");
  PartitionSpec s = based_digits(d, m, level_params(m).period * L);
  s.block_exponent = L;
  return s;
}

PartitionSpec PartitionSpec::based_digits(unsigned d, unsigned m, unsigned M) {
  if (d < 2) throw std::invalid_argument("digit base must be at least 2");
  if (M < 1) throw std::invalid_argument("power sum partition needs at least one digit");
  level_params(m);
  PartitionSpec s;
  s.kind = Kind::base_d;
  s.base = d;
  s.masks = {m};
  s.digits = M;
  return s;
}

PartitionSpec PartitionSpec::m2_word(unsigned L) {
  if (L < 1) throw std::invalid_argument("power sum partition needs L >= 1");
  PartitionSpec s;
  s.kind = Kind::m2_word;
  s.masks = {};
  s.digits = L;
  s.block_exponent = L;
  return s;
}

std::uint64_t PartitionSpec::interval_length() const {
  if (base == 2) {
    if (digits > 63)
      throw BudgetExceeded("interval 2^" + std::to_string(digits) + " exceeds any budget");
    return std::uint64_t{1} << digits;
  }
  std::uint64_t n = 1;
  for (unsigned i = 0; i < digits; ++i) {
    if (n > (std::uint64_t{1} << 62) / base)
      throw BudgetExceeded("interval " + std::to_string(base) + "^" + std::to_string(digits) +
                           " exceeds any budget");
    n *= base;
  }
  return n;
}

unsigned PartitionSpec::num_classes() const {
  switch (kind) {
    case Kind::single: return 2;
    case Kind::multi: return 1u << masks.size();
    case Kind::base_d: return base;
    case Kind::m2_word: return 2;
  }
  return 0;
}

unsigned PartitionSpec::class_of(std::uint64_t n) const {
  switch (kind) {
    case Kind::single:
      return tower_bit(masks[0], n);
    case Kind::multi: {
      unsigned c = 0;
      for (std::size_t i = 0; i < masks.size(); ++i)
        c |= unsigned(tower_bit(masks[i], n)) << i;
      return c;
    }
    case Kind::base_d: {
      unsigned m = masks[0], total = 0;
      for (unsigned p = 0; n > 0; ++p, n /= base)
        if ((p & m) == 0) total = (total + unsigned(n % base)) % base;
      return total;
    }
    case Kind::m2_word:
      return m2(n);
  }
  return 0;
}

int PartitionSpec::expected_degree() const {
  switch (kind) {
    case Kind::single:
      return int(level_params(masks[0]).selected) * int(block_exponent) - 1;
    case Kind::multi:
      return multi_degree(masks, block_exponent);
    case Kind::base_d:
      return int(vanishing_order(masks[0], digits)) - 1;
    case Kind::m2_word: {
      int count = 0;
      for (unsigned p = 0; p < digits; ++p)
        if (p % 6 != 2 && p % 6 != 5) ++count;
      return count - 1;
    }
  }
  return -1;
}

std::string PartitionSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::single:
      os << "level " << masks[0] << ", " << block_exponent << " aligned blocks";
      break;
    case Kind::multi: {
      os << "levels {";
      for (std::size_t i = 0; i < masks.size(); ++i) os << (i ? "," : "") << masks[i];
      os << "}, interval 2^" << digits;
      break;
    }
    case Kind::base_d:
      os << "level " << masks[0] << " in base " << base << ", " << digits << " digits";
      break;
    case Kind::m2_word:
      os << "m2 over 2^" << digits;
      break;
  }
  return os.str();
}

namespace {

void accumulate_range(const PartitionSpec& spec, int degree_max, std::uint64_t lo,
                      std::uint64_t hi, std::vector<std::vector<bigint>>& sums) {
  for (std::uint64_t n = lo; n < hi; ++n) {
    std::vector<bigint>& row = sums[spec.class_of(n)];
    bigint pw = 1;
    for (int k = 0; k <= degree_max; ++k) {
      row[k] += pw;
      pw *= n;
    }
  }
}

}  // namespace

PowerSumTable power_sums(const PartitionSpec& spec, int degree_max, const SweepOptions& opts) {
  if (degree_max < 0) throw std::invalid_argument("degree_max must be nonnegative");
  PowerSumTable table;
  table.interval_length = spec.interval_length();
  if (table.interval_length > opts.budget)
    throw BudgetExceeded("sweep of " + std::to_string(table.interval_length) +
                         " points exceeds budget " + std::to_string(opts.budget));
  table.classes = spec.num_classes();
  table.degree_max = degree_max;
  table.sums.assign(table.classes, std::vector<bigint>(degree_max + 1, 0));

  unsigned threads = std::max(1u, opts.threads);
  if (threads == 1 || table.interval_length < (std::uint64_t{1} << 16)) {
    accumulate_range(spec, degree_max, 0, table.interval_length, table.sums);
    return table;
  }

  // disjoint ranges, partial tables merged by addition in range order
  std::vector<std::vector<std::vector<bigint>>> partial(
      threads, std::vector<std::vector<bigint>>(table.classes,
                                                std::vector<bigint>(degree_max + 1, 0)));
  std::vector<std::thread> pool;
  std::uint64_t chunk = (table.interval_length + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t lo = t * chunk, hi = std::min(table.interval_length, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(
        [&, lo, hi, t] { accumulate_range(spec, degree_max, lo, hi, partial[t]); });
  }
  for (std::thread& th : pool) th.join();
  for (unsigned t = 0; t < threads; ++t)
    for (unsigned c = 0; c < table.classes; ++c)
      for (int k = 0; k <= degree_max; ++k) table.sums[c][k] += partial[t][c][k];
  return table;
}

std::uint64_t vanishing_order(unsigned m, std::uint64_t M) {
  LevelParams lp = level_params(m);
  std::uint64_t pattern = mask_set(m).pattern_word();
  std::uint64_t full = M / lp.period, rem = M % lp.period;
  std::uint64_t head = std::uint64_t(
      std::popcount(pattern & ((rem ? (std::uint64_t{1} << rem) : 1) - 1)));
  return full * lp.selected + head;
}

int multi_degree(const std::vector<unsigned>& masks, unsigned L) {
  PartitionSpec::multi(masks, L);  // validates masks
  unsigned p = 0;
  for (unsigned m : masks) p = std::max(p, level_params(m).period);
  if (L % p != 0)
    throw std::invalid_argument("incompatible block structure: L = " + std::to_string(L) +
                                " not a multiple of the largest period " + std::to_string(p));
  std::vector<std::uint64_t> patterns;
  std::uint64_t window = (p == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1;
  for (unsigned m : masks) patterns.push_back(mask_set(m).pattern_word() & window);

  unsigned min_count = p + 1;
  for (unsigned subset = 1; subset < (1u << masks.size()); ++subset) {
    std::uint64_t sym = 0;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (subset & (1u << i)) sym ^= patterns[i];
    min_count = std::min(min_count, unsigned(std::popcount(sym)));
  }
  return int(min_count) * int(L / p) - 1;
}

namespace {

PteVerdict verdict_from_sweep(const PartitionSpec& spec, const SweepOptions& opts,
                              bool sharpness_required) {
  PteVerdict v;
  v.partition = spec.describe();
  v.expected_degree = spec.expected_degree();
  v.sharpness_required = sharpness_required;
  v.table = power_sums(spec, v.expected_degree + 1, opts);
  v.interval_length = v.table.interval_length;
  v.classes = v.table.classes;

  v.equal_through = -1;
  for (int k = 0; k <= v.expected_degree + 1; ++k) {
    bool equal = true;
    for (unsigned c = 1; c < v.classes && equal; ++c)
      if (v.table.sums[c][k] != v.table.sums[0][k]) {
        equal = false;
        if (k == v.expected_degree + 1) {
          std::ostringstream os;
          os << "degree " << k << ": class 0 sums to " << v.table.sums[0][k] << ", class "
             << c << " to " << v.table.sums[c][k];
          v.witness = os.str();
        }
      }
    if (!equal) break;
    v.equal_through = k;
  }
  v.sharp = (v.equal_through == v.expected_degree);
  return v;
}

}  // namespace

PteVerdict pte_verify(unsigned m, unsigned L, const SweepOptions& opts) {
  return verdict_from_sweep(PartitionSpec::single(m, L), opts, true);
}

PteVerdict multi_pte_verify(const std::vector<unsigned>& masks, unsigned L,
                            const SweepOptions& opts) {
  return verdict_from_sweep(PartitionSpec::multi(masks, L), opts, false);
}

PteVerdict pte_d_verify(unsigned d, unsigned m, unsigned L, const SweepOptions& opts) {
  return verdict_from_sweep(PartitionSpec::based(d, m, L), opts, true);
}

PteVerdict pte_d_verify_digits(unsigned d, unsigned m, unsigned M, const SweepOptions& opts) {
  return verdict_from_sweep(PartitionSpec::based_digits(d, m, M), opts, true);
}

PteVerdict m2_pte_verify(unsigned L, const SweepOptions& opts) {
  return verdict_from_sweep(PartitionSpec::m2_word(L), opts, true);
}

unsigned digit_sum_mod(unsigned d, std::uint64_t n) {
  if (d < 2) throw std::invalid_argument("digit base must be at least 2");
  unsigned total = 0;
  for (; n > 0; n /= d) total = (total + unsigned(n % d)) % d;
  return total;
}

std::uint64_t alpha(unsigned d, unsigned j, std::uint64_t n) {
  if (j >= d) throw std::invalid_argument("alpha: class index out of range");
  unsigned t = digit_sum_mod(d, n);
  return d * n + ((j + d - t) % d);
}

CheckReport alpha_compose_check(unsigned d, std::uint64_t n_max) {
  CheckReport rep;
  rep.check = "base-" + std::to_string(d) + " positional enumerators";
  rep.range = n_max;
  for (std::uint64_t n = 0; n < n_max; ++n) {
    for (unsigned i = 0; i < d; ++i) {
      std::uint64_t ai = alpha(d, i, n);
      // lands in its class; one hit per block [dn, dn+d) makes alpha_j the
      // in-order enumerator of class j
      if (digit_sum_mod(d, ai) != i)
        rep.violations.push_back({"class", n, ai, i});
      for (unsigned j = 0; j < d; ++j) {
        std::uint64_t lhs = alpha(d, j, ai);
        std::uint64_t rhs = d * ai + ((j + d - i) % d);
        if (lhs != rhs) rep.violations.push_back({"compose", n, lhs, rhs});
      }
    }
  }
  return rep;
}

}  // namespace tmt
