#include <doctest.h>

#include <set>

#include <json.hpp>

#include "nwalk/automaton.hpp"
#include "nwalk/count.hpp"
#include "nwalk/motzkin.hpp"
#include "oracles.hpp"

using namespace nwalk;

TEST_CASE("dyck inference finds one periodic type") {
    InferResult inf = infer_types(NStepSet::dyck_unweighted());
    REQUIRE(inf.ok);
    REQUIRE(inf.types.size() == 1);
    const SumsetType& t = inf.types[0];
    CHECK(t.g == 2);
    CHECK(t.b == IntSet{0});
    CHECK(t.a.empty());
    CHECK(t.c.empty());
    CHECK(type_member(t, IntSet{0}));
}

TEST_CASE("dyck walk automaton is one state with three loops") {
    InferResult inf = infer_types(NStepSet::dyck_unweighted());
    TypeAutomaton aut = build_automaton(NStepSet::dyck_unweighted(), inf.types);
    REQUIRE(aut.states.size() == 1);
    CHECK(aut.initial == 0);
    std::set<std::pair<std::int64_t, std::int64_t>> deltas;
    for (auto& ar : aut.trans[0]) {
        CHECK(ar.to == 0);
        deltas.insert({ar.dmin, ar.dmax});
    }
    CHECK(deltas == std::set<std::pair<std::int64_t, std::int64_t>>{
                        {-1, -1}, {1, 1}, {-1, 1}});
}

TEST_CASE("motzkin inference finds the two-type automaton") {
    NStepSet S = NStepSet::motzkin_unweighted();
    InferResult inf = infer_types(S);
    REQUIRE(inf.ok);
    REQUIRE(inf.types.size() == 2);
    CHECK(inf.types[0].g == 2);  // ordered by decreasing period
    CHECK(inf.types[1].g == 1);
    CHECK(inf.types[1].k == 1);  // intervals have norm >= 1

    TypeAutomaton aut = build_automaton(S, inf.types);
    CHECK(aut.initial == 0);
    CHECK(aut.sigma[0] == 0);
    CHECK(aut.sigma[1] == 1);
}

TEST_CASE("motzkin transition matrices equal the printed ones") {
    NStepSet S = NStepSet::motzkin_unweighted();
    InferResult inf = infer_types(S);
    TypeAutomaton aut = build_automaton(S, inf.types);
    TransitionMatrices tm = transition_matrices(aut);
    auto A = motzkin_matrix_A();
    auto B = motzkin_matrix_B();
    auto C = motzkin_matrix_C();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(tm.A[i][j] == A[i][j]);
            CHECK(tm.B[0][i][j] == B[i][j]);
            CHECK(tm.C[0][i][j] == C[i][j]);
        }
    }
}

TEST_CASE("dyck export reproduces the three-term meander recurrence") {
    NStepSet S = NStepSet::dyck_unweighted();
    InferResult inf = infer_types(S);
    TypeAutomaton aut = build_automaton(S, inf.types);
    TransitionMatrices tm = transition_matrices(aut);
    REQUIRE(tm.A.size() == 1);
    // interior: the min-max-change polynomial itself
    LaurentPoly a;
    a.add_term(1, -1, -1);
    a.add_term(1, 1, 1);
    a.add_term(1, -1, 1);
    CHECK(tm.A[0][0] == a);
    // min = 0, max large: {-1} bounces the minimum up and lowers the max
    LaurentPoly b;
    b.add_term(1, 1, -1);
    b.add_term(2, 1, 1);
    CHECK(tm.B[0][0][0] == b);
    // reach {0}: only the two raising steps survive
    LaurentPoly c;
    c.add_term(2, 1, 1);
    CHECK(tm.C[0][0][0] == c);
}

TEST_CASE("meander stepper reproduces the boundary back edge") {
    NStepSet S = NStepSet::motzkin_unweighted();
    InferResult inf = infer_types(S);
    TypeAutomaton aut = build_automaton(S, inf.types);
    MeanderStepper stepper(aut);
    // state I (index 1) with reach {0,1}: step {-1} lands in II at {0}
    std::size_t step_m1 = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (S.step(i) == IntSet{-1}) step_m1 = i;
    auto land = stepper.step(1, 0, 1, step_m1);
    REQUIRE(land.has_value());
    CHECK(land->to == 0);
    CHECK(land->min == 0);
    CHECK(land->max == 0);
    // while a long interval only shrinks
    auto land2 = stepper.step(1, 0, 9, step_m1);
    REQUIRE(land2.has_value());
    CHECK(land2->to == 1);
    CHECK(land2->min == 0);
    CHECK(land2->max == 8);
}

TEST_CASE("automaton-predicted types equal the shape test on short walks") {
    NStepSet S = NStepSet::motzkin_unweighted();
    InferResult inf = infer_types(S);
    TypeAutomaton aut = build_automaton(S, inf.types);
    for (std::int64_t n = 1; n <= 5; ++n) {
        for (auto& [idx, cls] : enumerate_walks(S, n)) {
            std::size_t q = aut.initial;
            ReachState st;
            for (auto i : idx) {
                q = aut.trans[q][i].to;
                st = step_reach(st, S.step(i));
            }
            CHECK(type_member(aut.states[q], st.unconstrained));
            CHECK((aut.states[q].g == 2) ==
                  (motzkin_shape(st.unconstrained) == MotzkinType::II));
        }
    }
}

TEST_CASE("predicted state covers the actual reach on random step sets") {
    testing::Gen gen(5150);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<std::pair<IntSet, Rat>> steps;
        std::int64_t k = gen.range(2, 3);
        for (std::int64_t i = 0; i < k; ++i) {
            IntSet s = gen.int_set(-3, 3, 3, false);
            while (s.norm() > 3) s = gen.int_set(-3, 3, 3, false);
            steps.emplace_back(s, Rat(1));
        }
        NStepSet S{steps};
        InferResult inf = infer_types(S);
        REQUIRE(inf.ok);
        TypeAutomaton aut = build_automaton(S, inf.types);
        for (std::int64_t n = 1; n <= 5; ++n) {
            for (auto& [idx, cls] : enumerate_walks(S, n)) {
                std::size_t q = aut.initial;
                ReachState st;
                for (auto i : idx) {
                    q = aut.trans[q][i].to;
                    st = step_reach(st, S.step(i));
                }
                CHECK(type_member(aut.states[q], st.unconstrained));
            }
        }
    }
}

TEST_CASE("contains_zero agrees with materialized membership") {
    for (auto S : {NStepSet::dyck_unweighted(), NStepSet::motzkin_unweighted(),
                   NStepSet::parse("{0,3};{0,2};{-1}")}) {
        InferResult inf = infer_types(S);
        REQUIRE(inf.ok);
        TypeAutomaton aut = build_automaton(S, inf.types);
        for (std::size_t q = 0; q < aut.states.size(); ++q) {
            const SumsetType& t = aut.states[q];
            if (t.b.empty()) continue;
            for (std::int64_t j = t.k; j <= t.k + 3; ++j) {
                IntSet inst = type_instance(t, j, 0);
                if (inst.empty()) continue;
                for (std::int64_t m = -inst.norm() - 2; m <= 2; ++m) {
                    IntSet moved = inst.shifted(m);
                    CHECK(aut.contains_zero(q, moved.min(), moved.max()) ==
                          moved.contains(0));
                }
            }
        }
    }
}

TEST_CASE("bridge pipeline equals the DP on the named sets") {
    InferResult dyck = infer_types(NStepSet::dyck_unweighted());
    TypeAutomaton aut = build_automaton(NStepSet::dyck_unweighted(), dyck.types);
    RationalSeries b = bridge_series_from_automaton(aut, 9);
    std::vector<int> expect{1, 0, 7, 0, 63, 0, 583, 0, 5407};
    for (int n = 0; n <= 8; ++n) CHECK(b.coeff(n) == expect[n]);

    NStepSet SM = NStepSet::motzkin_unweighted();
    InferResult motz = infer_types(SM);
    TypeAutomaton autm = build_automaton(SM, motz.types);
    RationalSeries bm = bridge_series_from_automaton(autm, 8);
    CHECK(bm.coeff(1) == 4);
    auto dp = count_by_dp(SM, 7, WalkFamily::Bridge);
    for (int n = 0; n <= 7; ++n) CHECK(bm.coeff(n) == dp[n]);
}

TEST_CASE("all-positive singleton steps leave only the empty bridge") {
    NStepSet S = NStepSet::parse("{3}");
    InferResult inf = infer_types(S);
    REQUIRE(inf.ok);
    TypeAutomaton aut = build_automaton(S, inf.types);
    RationalSeries b = bridge_series_from_automaton(aut, 8);
    CHECK(b.coeff(0) == 1);
    for (int n = 1; n < 8; ++n) CHECK(b.coeff(n) == 0);
}

TEST_CASE("marginal example step set closes with finitely many types") {
    NStepSet S = NStepSet::parse("{-1};{-1,1};{-1,2}");
    InferResult inf = infer_types(S);
    REQUIRE(inf.ok);
    MESSAGE("inferred ", inf.types.size(), " types for {-1};{-1,1};{-1,2}");
    TypeAutomaton aut = build_automaton(S, inf.types);
    RationalSeries b = bridge_series_from_automaton(aut, 13);
    auto dp = count_by_dp(S, 12, WalkFamily::Bridge);
    for (int n = 0; n <= 12; ++n) CHECK(b.coeff(n) == dp[n]);
}

TEST_CASE("weighted bridge pipeline") {
    NStepSet S = NStepSet::dyck(Rat(1, 2), Rat(1, 3), Rat(1, 6));
    InferResult inf = infer_types(S);
    TypeAutomaton aut = build_automaton(S, inf.types);
    RationalSeries b = bridge_series_from_automaton(aut, 11);
    auto dp = count_by_dp(S, 10, WalkFamily::Bridge);
    for (int n = 0; n <= 10; ++n) CHECK(b.coeff(n) == dp[n]);
}

TEST_CASE("export schema round-trips as JSON") {
    NStepSet S = NStepSet::motzkin_unweighted();
    InferResult inf = infer_types(S);
    TypeAutomaton aut = build_automaton(S, inf.types);
    std::string doc = export_transition_system(aut);
    nlohmann::json j = nlohmann::json::parse(doc);
    REQUIRE(j.contains("states"));
    REQUIRE(j.contains("transitions"));
    REQUIRE(j.contains("boundary"));
    CHECK(j["states"].size() == 2);
    for (auto& st : j["states"]) {
        CHECK(st.contains("g"));
        CHECK(st.contains("k"));
        CHECK(st.contains("a"));
        CHECK(st.contains("b"));
        CHECK(st.contains("c"));
        CHECK(st.contains("sigma"));
    }
    CHECK(j["transitions"].size() == 2 * S.size());
    for (auto& tr : j["boundary"]) {
        CHECK(tr.contains("ell"));
        CHECK(tr.contains("dmin"));
        CHECK(tr.contains("dmax"));
        CHECK(tr.contains("max_kind"));
    }
    // the A00 entry of the export: II self-loops carry the four small steps
    int loops = 0;
    for (auto& tr : j["transitions"])
        if (tr["from"] == 0 && tr["to"] == 0) ++loops;
    CHECK(loops == 4);
}

TEST_CASE("type-compressed meander DP equals full-set DP") {
    for (auto S : {NStepSet::dyck_unweighted(), NStepSet::motzkin_unweighted()}) {
        InferResult inf = infer_types(S);
        TypeAutomaton aut = build_automaton(S, inf.types);
        auto full = count_by_dp(S, 16, WalkFamily::Meander, StateMode::FullSet);
        auto comp = count_by_dp(S, 16, WalkFamily::Meander, StateMode::TypeCompressed, &aut);
        CHECK(full == comp);
    }
}
