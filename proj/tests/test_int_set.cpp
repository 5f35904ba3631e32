#include <doctest.h>

#include <numeric>

#include "nwalk/int_set.hpp"
#include "oracles.hpp"

using namespace nwalk;

TEST_CASE("sumset basics") {
    CHECK(sumset(IntSet{0, 1}, IntSet{0, 1}) == IntSet{0, 1, 2});
    CHECK(sumset(IntSet{1, 2}, IntSet{}) == IntSet{});
    CHECK(sumset(IntSet{}, IntSet{1}) == IntSet{});
    CHECK(sumset(IntSet{2}, IntSet{-1, 1}) == IntSet{1, 3});
    CHECK(sumset(IntSet{0}, IntSet{-3, 5}) == IntSet{-3, 5});
}

TEST_CASE("nfold sumset") {
    CHECK(nfold_sumset(0, IntSet{5, 9}) == IntSet{0});
    CHECK(nfold_sumset(3, IntSet{0, 4}) == IntSet{0, 4, 8, 12});
    CHECK(nfold_sumset(2, IntSet{0, 1}) == IntSet{0, 1, 2});
    CHECK(nfold_sumset(4, IntSet{}) == IntSet{});
}

TEST_CASE("norm") {
    CHECK(IntSet{}.norm() == 0);
    CHECK(IntSet{3, 7}.norm() == 4);
    CHECK(IntSet{-2, 0, 5}.norm() == 7);
}

TEST_CASE("bottom pruning") {
    CHECK(prune_bottom(IntSet{3, 4, 6, 7, 8}, IntSet{-2, 1, 3, 5}) == IntSet{3, 7});
    CHECK(prune_bottom(IntSet{0, 1, 2, 3, 4}, IntSet{1, 2}) == IntSet{0, 3, 4});
    CHECK(prune_bottom(IntSet{}, IntSet{1, 2}) == IntSet{});
    // removing the smallest element is pruning by {0}
    CHECK(prune_bottom(IntSet{2, 5, 9}, IntSet{0}) == IntSet{5, 9});
}

TEST_CASE("top pruning") {
    CHECK(prune_top(IntSet{0, 1, 2, 3, 4}, IntSet{1, 2}) == IntSet{0, 1, 4});
    CHECK(prune_top(IntSet{0, 1, 2}, IntSet{0}) == IntSet{0, 1});
    CHECK(prune_top(IntSet{}, IntSet{0}) == IntSet{});
}

TEST_CASE("conjugate") {
    CHECK(conjugate(IntSet{1, 3, 4}) == IntSet{1, 2, 4});
    CHECK(conjugate(IntSet{0, 5}) == IntSet{0, 5});
    CHECK(conjugate(conjugate(IntSet{0, 2, 3})) == IntSet{0, 2, 3});
    CHECK(conjugate(IntSet{}) == IntSet{});
}

TEST_CASE("equivalence") {
    CHECK(equivalent(IntSet{1, 3}, IntSet{5, 7}));
    CHECK_FALSE(equivalent(IntSet{1, 3}, IntSet{1, 4}));
    CHECK_FALSE(equivalent(IntSet{}, IntSet{0}));
    CHECK(equivalent(IntSet{}, IntSet{}));
}

TEST_CASE("text format") {
    CHECK(IntSet{-1, 1}.to_string() == "{-1,1}");
    CHECK(IntSet::parse("{-1,1}") == IntSet{-1, 1});
    CHECK(IntSet::parse(" { 0 , 2 } ") == IntSet{0, 2});
    CHECK(IntSet::parse("{}") == IntSet{});
    CHECK_THROWS_AS(IntSet::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(IntSet::parse("{1,x}"), std::invalid_argument);
}

TEST_CASE("packed form agrees with canonical equality") {
    testing::Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        IntSet s = gen.int_set(-30, 90, 12);
        if (s.empty()) continue;
        PackedSet p = pack_set(s);
        CHECK(unpack_set(p) == s);
        IntSet t = gen.int_set(-30, 90, 12, false);
        CHECK((pack_set(s) == pack_set(t)) == (s == t));
    }
}

TEST_CASE("frobenius number") {
    CHECK(frobenius_number(IntSet{3, 5}) == 7);
    CHECK(frobenius_number(IntSet{2, 3}) == 1);
    CHECK(frobenius_number(IntSet{1}) == -1);
    CHECK_THROWS_AS(frobenius_number(IntSet{2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_number(IntSet{0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_number(IntSet{-3, 5}), std::invalid_argument);
}

TEST_CASE("frobenius agrees with the representability sieve") {
    // all 2- and 3-element gcd-1 sets with elements <= 12
    for (std::int64_t a = 1; a <= 12; ++a) {
        for (std::int64_t b = a + 1; b <= 12; ++b) {
            IntSet s{a, b};
            if (std::gcd(a, b) == 1)
                CHECK(frobenius_number(s) ==
                      testing::frobenius_brute(s, s.max() * s.max()));
            for (std::int64_t c = b + 1; c <= 12; ++c) {
                IntSet t{a, b, c};
                if (std::gcd(std::gcd(a, b), c) == 1)
                    CHECK(frobenius_number(t) ==
                          testing::frobenius_brute(t, t.max() * t.max()));
            }
        }
    }
}
