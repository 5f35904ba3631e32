#include <doctest.h>

#include "nwalk/appendix.hpp"
#include "nwalk/count.hpp"

using namespace nwalk;

TEST_CASE("registry rows all match DP") {
    auto results = oracle_check("all", 14);
    CHECK(results.size() == 74);
    int with_formula = 0;
    for (auto& r : results) {
        INFO("row ", r.id, " (", r.oeis, ")");
        CHECK(r.pass);
        CHECK(r.counts.size() == 15);
        if (r.has_formula) ++with_formula;
    }
    CHECK(with_formula == 41);
}

TEST_CASE("dp-only rows carry their counts") {
    auto j1 = oracle_check("J1", 6);
    REQUIRE(j1.size() == 1);
    CHECK_FALSE(j1[0].has_formula);
    CHECK(j1[0].counts[0] == 1);
    // steps {1}, {-1,0}, {-1,0,1}: two of the three one-step walks keep 0
    CHECK(j1[0].counts[1] == 2);
}

TEST_CASE("named rows") {
    auto a1 = oracle_check("A1", 12);
    REQUIRE(a1.size() == 1);
    CHECK(a1[0].pass);
    // excursions(n) = binom(n, n/2) for even n, 0 for odd
    const AppendixRow* row = nullptr;
    for (auto& r : appendix_rows())
        if (r.id == "A1") row = &r;
    REQUIRE(row);
    CHECK(appendix_formula(*row, 4) == 6);
    CHECK(appendix_formula(*row, 5) == 0);

    auto d = oracle_check("A051049", 12);
    REQUIRE(d.size() == 1);
    CHECK(d[0].pass);

    // meander row p_m1 = p_m11 = 1: counts binom(n, floor(n/2))
    auto m1 = oracle_check("M1", 12);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].pass);
}

TEST_CASE("oeis tag selects the whole group") {
    auto group = oracle_check("A005773", 8);
    CHECK(group.size() == 15);  // 8 excursion rows + 7 meander rows
    for (auto& r : group) CHECK(r.pass);
}

TEST_CASE("unknown pattern is rejected") {
    CHECK_THROWS_AS(oracle_check("Z9", 5), std::invalid_argument);
}
