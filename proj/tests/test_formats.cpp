#include "doctest.h"

#include "tmt/formats.hpp"

#include <sstream>
#include <stdexcept>

using namespace tmt;

TEST_CASE("b-file emission: exact bytes") {
    std::vector<BfileEntry> rows{{0, "0"}, {1, "1"}, {2, "1"}, {3, "0"}};
    CHECK(to_bfile(rows) == "0 0\n1 1\n2 1\n3 0\n");
    CHECK(to_bfile({}) == "");
}

TEST_CASE("b-file parse inverts emission byte for byte") {
    std::vector<BfileEntry> rows{
        {0, "2"}, {1, "4"}, {7, "297246520272"}, {8, "-450261"}};
    std::string text = to_bfile(rows);
    std::istringstream in(text);
    auto parsed = parse_bfile(in);
    REQUIRE(parsed.size() == rows.size());
    CHECK(to_bfile(parsed) == text);
}

TEST_CASE("b-file parse skips comments and blanks, rejects junk") {
    std::istringstream ok("# header comment\n\n  # indented comment\n5 10\n\n6 12\n");
    auto entries = parse_bfile(ok);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].index == 5);
    CHECK(entries[0].value == "10");
    CHECK(entries[1].index == 6);
    CHECK(entries[1].value == "12");

    std::istringstream three_fields("1 2 3\n");
    CHECK_THROWS_AS(parse_bfile(three_fields), std::invalid_argument);
    std::istringstream bad_index("x 2\n");
    CHECK_THROWS_AS(parse_bfile(bad_index), std::invalid_argument);
    std::istringstream lone_field("42\n");
    CHECK_THROWS_AS(parse_bfile(lone_field), std::invalid_argument);
}

TEST_CASE("csv emission and width checking") {
    CHECK(to_csv({"n", "p", "method"}, {{"1", "2", "brute"}, {"2", "4", "brute"}}) ==
          "n,p,method\n1,2,brute\n2,4,brute\n");
    CHECK(to_csv({"a"}, {}) == "a\n");
    CHECK_THROWS_AS(to_csv({"a", "b"}, {{"1"}}), std::invalid_argument);
}
