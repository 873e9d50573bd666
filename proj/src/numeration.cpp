#include "tmt/numeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "tmt/transform_op.hpp"

namespace tmt {

namespace {

const std::array<std::uint64_t, 93>& fib_table() {
  static const std::array<std::uint64_t, 93> table = [] {
    std::array<std::uint64_t, 93> t{};
    t[0] = 0;
    t[1] = 1;
    for (unsigned i = 2; i < 93; ++i) t[i] = t[i - 1] + t[i - 2];
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t fibonacci(unsigned i) {
  if (i > 92) throw std::invalid_argument("fibonacci(" + std::to_string(i) + ") overflows");
  return fib_table()[i];
}

ZeckendorfRep zeckendorf(std::uint64_t n) {
  const auto& fib = fib_table();
  if (n >= fib[92] && n - fib[92] >= fib[91])
    throw std::invalid_argument("zeckendorf: n needs Fibonacci numbers past 64 bits");
  ZeckendorfRep rep;
  unsigned i = unsigned(std::upper_bound(fib.begin() + 2, fib.end(), n) - fib.begin()) - 1;
  while (n > 0) {
    while (fib[i] > n) --i;
    rep.support.push_back(i);
    n -= fib[i];
    if (i > 2) i -= 2;  // greedy never picks neighbors
  }
  std::reverse(rep.support.begin(), rep.support.end());
  return rep;
}

std::uint64_t zeckendorf_value(const ZeckendorfRep& rep) {
  std::uint64_t n = 0;
  for (unsigned i : rep.support) n += fibonacci(i);
  return n;
}

bit ftm(std::uint64_t n) {
  const auto& fib = fib_table();
  if (n >= fib[92] && n - fib[92] >= fib[91])
    throw std::invalid_argument("ftm: n needs Fibonacci numbers past 64 bits");
  unsigned terms = 0;
  unsigned i = unsigned(std::upper_bound(fib.begin() + 2, fib.end(), n) - fib.begin()) - 1;
  while (n > 0) {
    while (fib[i] > n) --i;
    ++terms;
    n -= fib[i];
    if (i > 2) i -= 2;
  }
  return bit(terms & 1);
}

word ftm_prefix(std::size_t len) {
  word w(len);
  for (std::size_t n = 0; n < len; ++n) w[n] = ftm(n);
  return w;
}

word ftm_prefix_by_recursion(std::size_t len) {
  word cur{0};        // W(0), length F(3) = 2? no: length 1
  word prev;          // W(-1), treated as empty
  word next{0, 1};    // W(1)
  prev = cur;
  cur = next;
  while (cur.size() < len) {
    word grown = cur;
    for (bit x : prev) grown.push_back(bit(1 - x));
    prev = std::move(cur);
    cur = std::move(grown);
  }
  cur.resize(len);
  return cur;
}

FibBalanceVerdict fib_balance_check(unsigned r, const SweepOptions& opts) {
  if (r < 1 || 3 * r > 89) throw std::invalid_argument("fib balance: r out of range");
  FibBalanceVerdict v;
  v.r = r;
  v.interval = fibonacci(3 * r);
  if (v.interval > opts.budget)
    throw BudgetExceeded("fib balance: interval " + std::to_string(v.interval) +
                         " exceeds budget " + std::to_string(opts.budget));

  // signed partial sums at every point; remember them at the F_{L+3} marks
  std::vector<long long> observed;  // index L, only for F_{L+3} <= interval
  long long signedsum = 0;
  unsigned next_l = 0;
  for (std::uint64_t n = 0; n < v.interval; ++n) {
    while (next_l + 3 <= 92 && fibonacci(next_l + 3) == n) {
      observed.push_back(signedsum);
      ++next_l;
    }
    if (ftm(n)) {
      ++v.ones;
      --signedsum;
    } else {
      ++v.zeros;
      ++signedsum;
    }
  }
  while (next_l + 3 <= 92 && fibonacci(next_l + 3) == v.interval) {
    observed.push_back(signedsum);
    ++next_l;
  }
  v.balanced = (v.zeros == v.ones);

  // recursion values and the period-6 pattern
  const long long pattern[6] = {0, -1, -1, 0, 1, 1};
  long long s_prev = 0, s_cur = -1;  // s_0, s_1
  v.sign_pattern_ok = true;
  for (unsigned l = 0; l <= 30; ++l) {
    long long s_l = (l == 0) ? 0 : (l == 1) ? -1 : s_cur - s_prev;
    if (l >= 2) {
      s_prev = s_cur;
      s_cur = s_l;
    }
    if (s_l != pattern[l % 6]) v.sign_pattern_ok = false;
    if (l < observed.size() && observed[l] != s_l) v.sign_pattern_ok = false;
  }
  return v;
}

FibDefectReport fib_defect(unsigned r, int degree, const SweepOptions& opts) {
  if (degree != 1 && degree != 2)
    throw std::invalid_argument("fib defect: degree must be 1 or 2");
  if (r < 1 || 3 * r + 2 > 92) throw std::invalid_argument("fib defect: r out of range");
  FibDefectReport rep;
  rep.r = r;
  rep.degree = degree;

  std::uint64_t interval = fibonacci(3 * r);
  if (interval > opts.budget)
    throw BudgetExceeded("fib defect: interval " + std::to_string(interval) +
                         " exceeds budget " + std::to_string(opts.budget));
  bigint d1 = 0, d2 = 0;
  for (std::uint64_t n = 0; n < interval; ++n) {
    int sign = ftm(n) ? -1 : 1;
    if (sign > 0) {
      d1 += n;
      d2 += bigint(n) * n;
    } else {
      d1 -= n;
      d2 -= bigint(n) * n;
    }
  }
  rep.defect1 = d1;
  rep.defect2 = d2;

  int rsign = (r % 2 == 0) ? 1 : -1;
  rep.predicted1 = rsign * ((bigint(fibonacci(3 * r + 1)) - 1) / 2);
  bigint f3r = fibonacci(3 * r), f3r1 = fibonacci(3 * r + 1), f3r2 = fibonacci(3 * r + 2);
  bigint four_b = f3r2 * f3r2 - 2 * f3r * f3r - 4 * f3r1 - 2 * f3r + 3;
  if (four_b % 4 != 0) throw std::logic_error("fib defect: second moment not divisible by 4");
  rep.predicted2 = rsign * (four_b / 4);
  rep.match1 = (rep.defect1 == rep.predicted1);
  rep.match2 = (rep.defect2 == rep.predicted2);
  return rep;
}

CheckReport fib_poly_recursion_check(unsigned l_max) {
  if (l_max + 3 > 30) throw std::invalid_argument("fib polynomials: l_max too large");
  CheckReport rep;
  rep.check = "prefix-sign polynomials, direct vs. recursion";
  rep.range = l_max + 1;

  std::vector<std::vector<int>> polys(l_max + 1);
  polys[0] = {1, -1};
  if (l_max >= 1) polys[1] = {1, -1, -1};
  for (unsigned l = 2; l <= l_max; ++l) {
    std::uint64_t shift = fibonacci(l + 2);
    std::vector<int> p(fibonacci(l + 3), 0);
    for (std::size_t i = 0; i < polys[l - 1].size(); ++i) p[i] += polys[l - 1][i];
    for (std::size_t i = 0; i < polys[l - 2].size(); ++i) p[shift + i] -= polys[l - 2][i];
    polys[l] = std::move(p);
  }

  for (unsigned l = 0; l <= l_max; ++l) {
    std::uint64_t len = fibonacci(l + 3);
    if (polys[l].size() != len) {
      rep.violations.push_back({"degree", l, polys[l].size(), len});
      continue;
    }
    for (std::uint64_t n = 0; n < len; ++n) {
      int direct = ftm(n) ? -1 : 1;
      if (polys[l][n] != direct) {
        rep.violations.push_back({"coeff", l, std::uint64_t(polys[l][n] + 2), std::uint64_t(direct + 2)});
        break;
      }
    }
  }
  return rep;
}

namespace {

std::uint64_t m2_keep_mask() {
  std::uint64_t mask = 0;
  for (unsigned p = 0; p < 64; ++p)
    if (p % 6 != 2 && p % 6 != 5) mask |= std::uint64_t{1} << p;
  return mask;
}

}  // namespace

bit m2(std::uint64_t n) {
  static const std::uint64_t keep = m2_keep_mask();
  return bit(std::popcount(n & keep) & 1);
}

word m2_prefix(std::size_t len) {
  word w(len);
  for (std::size_t n = 0; n < len; ++n) w[n] = m2(n);
  return w;
}

CheckReport m2_check(std::size_t len) {
  CheckReport rep;
  rep.check = "nested recurrence vs. digit-filter closed form";
  rep.range = len;
  word table(len);
  for (std::size_t x = 0; x < len; ++x) {
    if (x == 0)
      table[x] = 0;
    else if (x % 2 == 1)
      table[x] = bit(1 - table[x - 1]);
    else if (x % 4 == 0)
      table[x] = table[x / 2 + table[x / 4]];
    else  // x = 4n + 2, index 2n + 1 - M2(n) = x/2 - M2(n)
      table[x] = table[x / 2 - table[(x - 2) / 4]];
  }
  for (std::size_t x = 0; x < len; ++x)
    if (table[x] != m2(x)) rep.violations.push_back({"m2", x, table[x], m2(x)});
  return rep;
}

FtmOrbitResult tm_transform_of_ftm(std::size_t len, unsigned profile_max) {
  FtmOrbitResult res;
  res.label = "EXPLORATORY";
  SequenceOracle seed("ftm", [](std::uint64_t n) { return ftm(n); });
  res.transformed = transform_prefix(seed, len);
  for (bit x : res.transformed) (x ? res.ones : res.zeros)++;
  if (profile_max > 0)
    res.profile = factor_complexity_brute(
        [&seed](std::size_t n) { return transform_prefix(seed, n); }, profile_max, {},
        "transform of ftm");
  return res;
}

}  // namespace tmt
