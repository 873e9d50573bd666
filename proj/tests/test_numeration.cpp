#include "doctest.h"

#include "tmt/numeration.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

using namespace tmt;

TEST_CASE("Fibonacci table endpoints and bounds") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(10) == 55);
    CHECK(fibonacci(24) == 46368);
    CHECK(fibonacci(30) == 832040);
    CHECK(fibonacci(92) == 7540113804746346429ull);
    CHECK_THROWS_AS(fibonacci(93), std::invalid_argument);
}

TEST_CASE("greedy decompositions: spot values and full round trip") {
    CHECK(zeckendorf(0).support.empty());
    CHECK(zeckendorf(1).support == std::vector<unsigned>{2});
    CHECK(zeckendorf(2).support == std::vector<unsigned>{3});
    CHECK(zeckendorf(4).support == std::vector<unsigned>{2, 4});
    CHECK(zeckendorf(100).support == std::vector<unsigned>{4, 6, 11});

    for (std::uint64_t n = 0; n < (1u << 20); ++n) {
        auto rep = zeckendorf(n);
        for (std::size_t i = 0; i < rep.support.size(); ++i) {
            CHECK(rep.support[i] >= 2);
            if (i > 0) CHECK(rep.support[i] >= rep.support[i - 1] + 2);
        }
        CHECK(zeckendorf_value(rep) == n);
        CHECK(ftm(n) == (rep.support.size() & 1));
    }

    // Values past the largest representable Fibonacci sum are rejected
    // rather than silently mis-decomposed.
    CHECK(zeckendorf(fibonacci(92)).support == std::vector<unsigned>{92});
    CHECK_THROWS_AS(zeckendorf(~0ull), std::invalid_argument);
}

TEST_CASE("term-count parity: first letters and prefix routes agree") {
    const bit first8[] = {0, 1, 1, 1, 0, 1, 0, 0};
    for (unsigned n = 0; n < 8; ++n) CHECK(ftm(n) == first8[n]);

    // Enumerated positions of each letter start as expected.
    std::vector<std::uint64_t> zeros, ones;
    for (std::uint64_t n = 0; n < 8; ++n) (ftm(n) ? ones : zeros).push_back(n);
    CHECK(zeros == std::vector<std::uint64_t>{0, 4, 6, 7});
    CHECK(ones == std::vector<std::uint64_t>{1, 2, 3, 5});

    // Direct evaluation vs. the word recursion, at a Fibonacci length and
    // at a generic one.
    for (std::size_t len : {std::size_t{10946}, std::size_t{10000}}) {
        word direct = ftm_prefix(len);
        word recursive = ftm_prefix_by_recursion(len);
        REQUIRE(direct.size() == len);
        CHECK(direct == recursive);
        for (std::size_t n = 0; n < len; n += 97) CHECK(direct[n] == ftm(n));
    }
}

TEST_CASE("letter counts balance on the distinguished intervals") {
    for (unsigned r = 1; r <= 8; ++r) {
        auto verdict = fib_balance_check(r);
        CHECK(verdict.interval == fibonacci(3 * r));
        CHECK(verdict.zeros == verdict.interval / 2);
        CHECK(verdict.ones == verdict.zeros);
        CHECK(verdict.balanced);
        CHECK(verdict.sign_pattern_ok);
        CHECK(verdict.ok());
    }
}

TEST_CASE("signed prefix sums follow the period-6 pattern") {
    // s_L = sum of (-1)^ftm over [0, F_{L+3}), computed naively, must walk
    // the cycle 0,-1,-1,0,1,1 and satisfy s_L = s_{L-1} - s_{L-2}.
    const long long pattern[6] = {0, -1, -1, 0, 1, 1};
    std::vector<long long> s;
    for (unsigned L = 0; L <= 12; ++L) {
        long long total = 0;
        for (std::uint64_t n = 0; n < fibonacci(L + 3); ++n)
            total += ftm(n) ? -1 : 1;
        s.push_back(total);
        CHECK(total == pattern[L % 6]);
    }
    for (unsigned L = 2; L <= 12; ++L) CHECK(s[L] == s[L - 1] - s[L - 2]);
}

TEST_CASE("signed moments match the closed predictions") {
    // defect_k = sum over zero positions of n^k minus sum over ones.
    const long long deg1[] = {-1, 6, -27, 116, -493};
    const long long deg2[] = {-1, 62, -1331, 24860, -450261};
    for (unsigned r = 1; r <= 5; ++r) {
        bigint d1 = 0, d2 = 0;
        for (std::uint64_t n = 0; n < fibonacci(3 * r); ++n) {
            int sign = ftm(n) ? -1 : 1;
            d1 += sign * bigint(n);
            d2 += sign * bigint(n) * n;
        }
        CHECK(d1 == deg1[r - 1]);
        CHECK(d2 == deg2[r - 1]);

        auto rep = fib_defect(r, 2);
        CHECK(rep.defect1 == d1);
        CHECK(rep.defect2 == d2);
        CHECK(rep.predicted1 == d1);
        CHECK(rep.predicted2 == d2);
        CHECK(rep.match1);
        CHECK(rep.match2);
        CHECK(rep.ok());
    }
    // The paper's verification range for both closed forms.
    for (unsigned r = 6; r <= 10; ++r) {
        auto rep = fib_defect(r, 2);
        CHECK(rep.match1);
        CHECK(rep.match2);
        CHECK(rep.ok());
    }
}

TEST_CASE("prefix-sign polynomials satisfy the two-term recursion") {
    CHECK(fib_poly_recursion_check(15).ok());
    CHECK_THROWS_AS(fib_poly_recursion_check(28), std::invalid_argument);
}

TEST_CASE("sweep budgets apply to the Fibonacci intervals") {
    SweepOptions small;
    small.budget = 1000;
    CHECK_THROWS_AS(fib_balance_check(8, small), BudgetExceeded);
    CHECK_THROWS_AS(fib_defect(10, 1, small), BudgetExceeded);
}

TEST_CASE("filtered parity: first letters, recurrences, local balance") {
    const bit first8[] = {0, 1, 1, 0, 0, 1, 1, 0};
    for (unsigned n = 0; n < 8; ++n) CHECK(m2(n) == first8[n]);

    CHECK(m2_check(std::size_t{1} << 16).ok());

    // Top-down replay of the defining recurrences, independent of the
    // library's bottom-up table.
    std::function<bit(std::uint64_t)> replay = [&](std::uint64_t x) -> bit {
        if (x == 0) return 0;
        if (x & 1) return static_cast<bit>(1 - replay(x - 1));
        if (x % 4 == 0) return replay(x / 2 + replay(x / 4));
        return replay(x / 2 - replay((x - 2) / 4));
    };
    for (std::uint64_t x = 0; x < 2048; ++x) CHECK(replay(x) == m2(x));

    // Consecutive pairs always split one of each letter.
    for (std::uint64_t n = 0; n < (1u << 15); ++n)
        CHECK(m2(2 * n) + m2(2 * n + 1) == 1);

    word w = m2_prefix(64);
    for (unsigned n = 0; n < 64; ++n) CHECK(w[n] == m2(n));
}

TEST_CASE("transform applied to the Fibonacci parity word") {
    auto orbit = tm_transform_of_ftm(2048, 8);
    CHECK(orbit.label == "EXPLORATORY");
    CHECK(orbit.transformed.size() == 2048);
    CHECK(orbit.zeros + orbit.ones == 2048);
    CHECK(orbit.transformed[0] == 0);
    CHECK(orbit.transformed[1] == 1);
    REQUIRE(orbit.profile.values.size() == 8);
    for (unsigned n = 2; n <= 8; ++n)
        CHECK(orbit.profile.p(n) >= orbit.profile.p(n - 1));
}
