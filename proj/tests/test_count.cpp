#include <doctest.h>

#include "nwalk/count.hpp"
#include "oracles.hpp"

using namespace nwalk;

TEST_CASE("dyck golden counts") {
    NStepSet S = NStepSet::dyck_unweighted();
    auto walks = count_by_dp(S, 6, WalkFamily::Walk);
    Rat expect = 1;
    for (int n = 0; n <= 6; ++n, expect *= 3) CHECK(walks[n] == expect);

    auto bridges = count_by_dp(S, 8, WalkFamily::Bridge);
    std::vector<int> bexp{1, 0, 7, 0, 63, 0, 583, 0, 5407};
    for (int n = 0; n <= 8; ++n) CHECK(bridges[n] == bexp[n]);

    auto exc = count_by_dp(S, 8, WalkFamily::Excursion);
    std::vector<int> eexp{1, 0, 4, 0, 28, 0, 224, 0, 1888};
    for (int n = 0; n <= 8; ++n) CHECK(exc[n] == eexp[n]);
}

TEST_CASE("DP equals the exhaustive oracle") {
    for (auto S : {NStepSet::dyck(Rat(1, 2), Rat(1, 3), Rat(1, 6)),
                   NStepSet::parse("{-2,1};{0,3};{-1}"),
                   NStepSet::parse("{-1};{2};{-1,0,2}", "1/3,1/2,1/6")}) {
        auto w = count_by_dp(S, 6, WalkFamily::Walk);
        auto b = count_by_dp(S, 6, WalkFamily::Bridge);
        auto m = count_by_dp(S, 6, WalkFamily::Meander);
        auto e = count_by_dp(S, 6, WalkFamily::Excursion);
        for (int n = 0; n <= 6; ++n) {
            OracleTallies t = enumerate_oracle(S, n);
            CHECK(w[n] == t.walks);
            CHECK(b[n] == t.bridges);
            CHECK(m[n] == t.meanders);
            CHECK(e[n] == t.excursions);
        }
    }
}

TEST_CASE("class monotonicity") {
    NStepSet S = NStepSet::motzkin_unweighted();
    auto w = count_by_dp(S, 7, WalkFamily::Walk);
    auto b = count_by_dp(S, 7, WalkFamily::Bridge);
    auto m = count_by_dp(S, 7, WalkFamily::Meander);
    auto e = count_by_dp(S, 7, WalkFamily::Excursion);
    for (int n = 0; n <= 7; ++n) {
        CHECK(e[n] <= m[n]);
        CHECK(m[n] <= w[n]);
        CHECK(b[n] <= w[n]);
    }
}

TEST_CASE("sign-window relation behind the bridge identity") {
    // walks split into min>0, max<0, and min<=0<=max: nothing has both
    // min>0 and max<0, so the window count is walks - minpos - maxneg.
    for (auto S : {NStepSet::dyck_unweighted(), NStepSet::parse("{-2,1};{1,2};{0}")}) {
        auto w = count_by_dp(S, 8, WalkFamily::Walk);
        auto span = count_by_dp(S, 8, WalkFamily::SpansZero);
        auto minpos = count_by_dp(S, 8, WalkFamily::MinPositive);
        auto maxneg = count_by_dp(S, 8, WalkFamily::MaxNegative);
        for (int n = 0; n <= 8; ++n)
            CHECK(span[n] == w[n] - minpos[n] - maxneg[n]);
    }
    // on even-length Dyck walks the window count is exactly the bridges
    auto b = count_by_dp(NStepSet::dyck_unweighted(), 8, WalkFamily::Bridge);
    auto span = count_by_dp(NStepSet::dyck_unweighted(), 8, WalkFamily::SpansZero);
    for (int n = 0; n <= 8; n += 2) CHECK(b[n] == span[n]);
}

TEST_CASE("type-compressed mode equals full-set mode") {
    for (auto S : {NStepSet::dyck_unweighted(), NStepSet::motzkin_unweighted(),
                   NStepSet::dyck(Rat(1, 2), Rat(1, 3), Rat(1, 6))}) {
        for (auto fam : {WalkFamily::Walk, WalkFamily::Bridge, WalkFamily::Meander,
                         WalkFamily::Excursion}) {
            auto full = count_by_dp(S, 10, fam, StateMode::FullSet);
            auto comp = count_by_dp(S, 10, fam, StateMode::TypeCompressed);
            CHECK(full == comp);
        }
    }
}

TEST_CASE("classical top-path counts") {
    // Dyck S_T = {-1 (weight 1), 1 (weight 2)}
    std::vector<std::pair<std::int64_t, Rat>> st{{-1, 1}, {1, 2}};
    auto meanders = classical_count(st, 4, false);
    std::vector<int> mexp{1, 2, 6, 16, 48};
    for (int n = 0; n <= 4; ++n) CHECK(meanders[n] == mexp[n]);
    auto exc = classical_count(st, 4, true);
    std::vector<int> eexp{1, 0, 2, 0, 8};
    for (int n = 0; n <= 4; ++n) CHECK(exc[n] == eexp[n]);

    // zero-weight steps contribute nothing
    std::vector<std::pair<std::int64_t, Rat>> st2{{-1, 1}, {1, 2}, {5, 0}};
    CHECK(classical_count(st2, 4, false) == meanders);
}

TEST_CASE("meander counts match the top-path multiset") {
    for (auto S : {NStepSet::motzkin_unweighted(),
                   NStepSet::parse("{-2,1};{0,3};{-1}", "1/2,1/3,1/6")}) {
        auto dp = count_by_dp(S, 7, WalkFamily::Meander);
        auto classical = classical_count(S.top_step_weights(), 7, false);
        CHECK(dp == classical);
        // excursions ending in {0} match classical excursions
        auto cexc = classical_count(S.top_step_weights(), 7, true);
        for (int n = 0; n <= 7; ++n) {
            auto dist = excursion_final_max_distribution(S, n);
            Rat zero_ending = dist.count(0) ? dist[0] : Rat(0);
            CHECK(zero_ending == cexc[n]);
        }
    }
}

TEST_CASE("distributions agree with the plain-map oracle") {
    NStepSet S = NStepSet::dyck(Rat(1, 2), Rat(1, 4), Rat(1, 4));
    auto dist = excursion_final_max_distribution(S, 6);
    auto oracle = testing::meander_minmax_dist(S, 6);
    for (auto& [mm, wt] : oracle) {
        if (mm.first != 0) continue;
        CHECK(dist[mm.second] == wt);
    }
}

TEST_CASE("returns distribution sums to the excursion count") {
    NStepSet S = NStepSet::dyck_unweighted();
    auto rd = excursion_returns_distribution(S, 6);
    Rat total = 0;
    for (auto& [k, v] : rd) total += v;
    CHECK(total == count_by_dp(S, 6, WalkFamily::Excursion)[6]);
    // a classical Dyck excursion of length 2 has exactly one return
    auto rd2 = excursion_returns_distribution(NStepSet::dyck(1, 1, 0), 2);
    CHECK(rd2[1] == 1);
}
