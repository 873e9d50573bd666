#include "doctest.h"

#include "tmt/pte.hpp"
#include "tmt/mask_core.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

using namespace tmt;

namespace {

// Digit-walk evaluation of the selected-position parity, independent of the
// pattern-word implementation in the library.
bit naive_tower_bit(unsigned m, std::uint64_t n) {
    unsigned acc = 0;
    for (unsigned p = 0; n != 0; ++p, n >>= 1)
        if ((n & 1) && ((p & m) == 0)) acc ^= 1;
    return static_cast<bit>(acc);
}

// Class power sums computed by a plain loop, no shared code with power_sums.
std::vector<std::vector<bigint>> naive_sums(const PartitionSpec& spec,
                                            unsigned degree_max) {
    std::vector<std::vector<bigint>> out(
        spec.num_classes(), std::vector<bigint>(degree_max + 1, 0));
    const std::uint64_t n_total = spec.interval_length();
    for (std::uint64_t n = 0; n < n_total; ++n) {
        auto& row = out[spec.class_of(n)];
        bigint pw = 1;
        for (unsigned k = 0; k <= degree_max; ++k) {
            row[k] += pw;
            pw *= n;
        }
    }
    return out;
}

// Sum of base-d digits of n at positions p with p & m == 0, reduced mod d.
unsigned naive_digit_class(unsigned d, unsigned m, std::uint64_t n) {
    unsigned total = 0;
    for (unsigned p = 0; n != 0; ++p, n /= d)
        if ((p & m) == 0) total = (total + static_cast<unsigned>(n % d)) % d;
    return total;
}

}  // namespace

TEST_CASE("binary partition at level 0, two blocks: frozen power sums") {
    auto verdict = pte_verify(0, 2);
    CHECK(verdict.interval_length == 16);
    CHECK(verdict.classes == 2);
    CHECK(verdict.expected_degree == 3);
    CHECK(verdict.equal_through == 3);
    CHECK(verdict.sharp);
    CHECK(verdict.ok());

    const auto& t = verdict.table.sums;
    CHECK(t[0][1] == 60);
    CHECK(t[1][1] == 60);
    CHECK(t[0][2] == 620);
    CHECK(t[1][2] == 620);
    CHECK(t[0][3] == 7200);
    CHECK(t[1][3] == 7200);
    CHECK(t[0][4] == 89924);
    CHECK(t[1][4] == 88388);
}

TEST_CASE("binary partition at level 1, two blocks: degree 1, sharp at 2") {
    auto verdict = pte_verify(1, 2);
    CHECK(verdict.interval_length == 16);
    CHECK(verdict.expected_degree == 1);
    CHECK(verdict.equal_through == 1);
    CHECK(verdict.sharp);
    CHECK(verdict.ok());

    const auto& t = verdict.table.sums;
    CHECK(t[0][1] == 60);
    CHECK(t[1][1] == 60);
    CHECK(t[0][2] == 636);
    CHECK(t[1][2] == 604);
}

TEST_CASE("power sums match a naive loop on small intervals") {
    for (unsigned m : {0u, 1u, 2u, 3u, 5u}) {
        auto spec = PartitionSpec::single(m, 1);
        auto table = power_sums(spec, 5);
        auto naive = naive_sums(spec, 5);
        for (unsigned c = 0; c < spec.num_classes(); ++c)
            for (unsigned k = 0; k <= 5; ++k)
                CHECK(table.sums[c][k] == naive[c][k]);
    }
}

TEST_CASE("single-mask degrees scale with the selection density") {
    auto v5 = pte_verify(5, 1);
    CHECK(v5.interval_length == 256);
    CHECK(v5.expected_degree == 1);
    CHECK(v5.ok());

    auto v9 = pte_verify(9, 1);
    CHECK(v9.interval_length == 65536);
    CHECK(v9.expected_degree == 3);
    CHECK(v9.ok());
}

TEST_CASE("vanishing order counts selected positions in a prefix") {
    for (unsigned m = 0; m <= 31; ++m) {
        auto lp = level_params(m);
        for (unsigned big = 1; big <= 4; ++big) {
            // Over a whole number of periods the count is density times length.
            CHECK(vanishing_order(m, lp.period * big) == lp.selected * big);
        }
        unsigned count = 0;
        for (unsigned p = 0; p < 100; ++p) {
            CHECK(vanishing_order(m, p) == count);
            if ((p & m) == 0) ++count;
        }
    }
}

TEST_CASE("several masks at once: guaranteed degree from symmetric differences") {
    // Patterns for masks 0 and 1 differ at odd positions only: one position
    // per window of length two, so the bound is L/2 - 1.
    for (unsigned L : {4u, 8u, 12u}) {
        CHECK(multi_degree({0, 1}, L) == L / 2 - 1);
        CHECK(multi_degree({0, 2}, L) == L / 2 - 1);
        CHECK(multi_degree({0, 1, 2}, L) == L / 2 - 1);
    }
    CHECK_THROWS_AS(multi_degree({0, 2}, 6), std::invalid_argument);
    CHECK_THROWS_AS(multi_degree({0, 0}, 4), std::invalid_argument);
    CHECK_THROWS_AS(multi_degree({}, 4), std::invalid_argument);
}

TEST_CASE("masks 0 and 1 jointly over 256 points: degree 3, observed sharp at 4") {
    auto verdict = multi_pte_verify({0, 1}, 8);
    CHECK(verdict.interval_length == 256);
    CHECK(verdict.classes == 4);
    CHECK(verdict.expected_degree == 3);
    CHECK(verdict.equal_through == 3);
    // Sharpness is reported but not required for the joint partition.
    CHECK(verdict.sharp);
    CHECK_FALSE(verdict.sharpness_required);
    CHECK(verdict.ok());

    // All four classes have equal size (checked through the degree-0 sums).
    for (unsigned c = 0; c < 4; ++c) CHECK(verdict.table.sums[c][0] == 64);
}

TEST_CASE("a singleton mask list reduces to the two-class verdict") {
    auto joint = multi_pte_verify({5}, 8);
    auto single = pte_verify(5, 1);
    CHECK(joint.interval_length == single.interval_length);
    CHECK(joint.expected_degree == single.expected_degree);
    CHECK(joint.equal_through == single.equal_through);
    REQUIRE(joint.table.sums.size() == 2);
    for (unsigned c = 0; c < 2; ++c)
        for (unsigned k = 0; k < joint.table.sums[c].size() &&
                             k < single.table.sums[c].size();
             ++k)
            CHECK(joint.table.sums[c][k] == single.table.sums[c][k]);
}

TEST_CASE("base 2 digit-sum classes coincide with the two-class split") {
    for (unsigned m : {0u, 1u, 3u}) {
        auto a = pte_d_verify(2, m, 2);
        auto b = pte_verify(m, 2);
        CHECK(a.interval_length == b.interval_length);
        CHECK(a.expected_degree == b.expected_degree);
        CHECK(a.equal_through == b.equal_through);
        CHECK(a.sharp == b.sharp);
        for (std::uint64_t n = 0; n < a.interval_length; ++n)
            CHECK(naive_digit_class(2, m, n) == tower_bit(m, n));
    }
}

TEST_CASE("base 3, every digit selected, three digits: degree 2, sharp") {
    auto verdict = pte_d_verify_digits(3, 0, 3);
    CHECK(verdict.interval_length == 27);
    CHECK(verdict.classes == 3);
    CHECK(verdict.expected_degree == 2);
    CHECK(verdict.equal_through == 2);
    CHECK(verdict.sharp);
    CHECK(verdict.ok());

    // Cross-check the sums against the naive split.
    auto spec = PartitionSpec::based_digits(3, 0, 3);
    auto naive = naive_sums(spec, 3);
    for (unsigned c = 0; c < 3; ++c)
        for (unsigned k = 0; k <= 3; ++k)
            CHECK(verdict.table.sums[c][k] == naive[c][k]);
}

TEST_CASE("base 3, alternate digits, two digits: degree 0 with unequal linear sums") {
    auto verdict = pte_d_verify_digits(3, 1, 2);
    CHECK(verdict.interval_length == 9);
    CHECK(verdict.expected_degree == 0);
    CHECK(verdict.equal_through == 0);
    CHECK(verdict.sharp);
    CHECK(verdict.ok());
    CHECK(verdict.table.sums[0][1] == 9);
    CHECK(verdict.table.sums[1][1] == 12);
    CHECK(verdict.table.sums[2][1] == 15);
}

TEST_CASE("block-count form maps to digit count via the period") {
    // One block at level 1 covers period-many digit positions.
    auto a = pte_d_verify(3, 1, 1);
    auto b = pte_d_verify_digits(3, 1, 2);
    CHECK(a.interval_length == b.interval_length);
    CHECK(a.expected_degree == b.expected_degree);
    CHECK(a.equal_through == b.equal_through);
}

// Character-sum route: with omega a primitive cube root of unity, the class
// sums are equal through degree D exactly when sum omega^(t*class(n)) n^k
// vanishes for k <= D and t in {1, 2}. Arithmetic in Z[omega] with
// omega^2 = -1 - omega keeps everything exact.
TEST_CASE("cube-root character sums vanish exactly through the verdict degree") {
    struct Eis {
        bigint a, b;  // a + b*omega
    };
    const Eis omega_pow[3] = {{1, 0}, {0, 1}, {-1, -1}};

    auto char_sum = [&](std::uint64_t n_total, unsigned t, unsigned k) {
        Eis total{0, 0};
        for (std::uint64_t n = 0; n < n_total; ++n) {
            unsigned cls = naive_digit_class(3, 0, n);
            const Eis& w = omega_pow[(t * cls) % 3];
            bigint pw = 1;
            for (unsigned i = 0; i < k; ++i) pw *= n;
            total.a += w.a * pw;
            total.b += w.b * pw;
        }
        return total.a == 0 && total.b == 0;
    };
    for (unsigned t : {1u, 2u}) {
        // Two digit positions: linear sums vanish, quadratic ones do not.
        for (unsigned k = 0; k <= 2; ++k) CHECK(char_sum(9, t, k) == (k <= 1));
        // Three digit positions: one degree higher.
        for (unsigned k = 0; k <= 3; ++k) CHECK(char_sum(27, t, k) == (k <= 2));
    }
}

TEST_CASE("digit maps: fixed points and composition") {
    // alpha_j(n) appends a digit chosen so the selected digit sum lands on j.
    for (unsigned d : {2u, 3u, 4u}) {
        auto report = alpha_compose_check(d, 500);
        CHECK(report.ok());
    }
    CHECK(alpha(3, 0, 2) == 7);    // digit sum of 2 is 2, needs +1: 3*2+1
    CHECK(alpha(3, 1, 7) == 22);   // t_3(7) = 3 = 0 mod 3, needs +1: 21+1
    CHECK_THROWS_AS(alpha(3, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(alpha(1, 0, 0), std::invalid_argument);
}

TEST_CASE("word classes from the sparse recoding: frozen small case") {
    auto verdict = m2_pte_verify(3);
    CHECK(verdict.interval_length == 8);
    CHECK(verdict.classes == 2);
    CHECK(verdict.expected_degree == 1);
    CHECK(verdict.equal_through == 1);
    CHECK(verdict.sharp);
    CHECK(verdict.ok());
    CHECK(verdict.table.sums[0][1] == 14);  // {0, 3, 4, 7}
    CHECK(verdict.table.sums[1][1] == 14);  // {1, 2, 5, 6}
    CHECK(verdict.table.sums[0][2] == 74);
    CHECK(verdict.table.sums[1][2] == 66);
}

TEST_CASE("word-class degrees at longer lengths") {
    // Positions p < L with p mod 6 not in {2, 5} drive the expected degree.
    auto count_kept = [](unsigned L) {
        unsigned c = 0;
        for (unsigned p = 0; p < L; ++p)
            if (p % 6 != 2 && p % 6 != 5) ++c;
        return c;
    };
    for (unsigned L : {3u, 6u, 9u, 12u}) {
        auto verdict = m2_pte_verify(L);
        CHECK(verdict.expected_degree == count_kept(L) - 1);
        CHECK(verdict.equal_through == static_cast<int>(verdict.expected_degree));
        CHECK(verdict.sharp);
        CHECK(verdict.ok());
    }
}

TEST_CASE("interval budget restricts sweep size") {
    SweepOptions small;
    small.budget = 1 << 10;
    CHECK_THROWS_AS(pte_verify(0, 16, small), BudgetExceeded);
    CHECK_THROWS_AS(power_sums(PartitionSpec::single(0, 8), 1, small),
                    BudgetExceeded);
    // Interval lengths that cannot be represented are rejected outright.
    CHECK_THROWS_AS(PartitionSpec::single(0, 40).interval_length(),
                    BudgetExceeded);
    CHECK_THROWS_AS(PartitionSpec::based_digits(10, 0, 30).interval_length(),
                    BudgetExceeded);
}

TEST_CASE("threaded sweeps agree with the sequential path") {
    SweepOptions par;
    par.threads = 3;
    auto spec = PartitionSpec::single(0, 8);
    auto seq = power_sums(spec, 4);
    auto thr = power_sums(spec, 4, par);
    REQUIRE(seq.sums.size() == thr.sums.size());
    for (unsigned c = 0; c < seq.sums.size(); ++c)
        for (unsigned k = 0; k <= 4; ++k)
            CHECK(seq.sums[c][k] == thr.sums[c][k]);
}

TEST_CASE("partition constructors reject malformed requests") {
    CHECK_THROWS_AS(PartitionSpec::single(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec::single(32, 1), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec::multi({1, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec::based(1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec::based_digits(3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec::m2_word(0), std::invalid_argument);
}
