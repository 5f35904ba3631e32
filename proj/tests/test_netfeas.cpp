#include <doctest.h>

#include <cmath>

#include "nwalk/count.hpp"
#include "nwalk/netfeas.hpp"
#include "oracles.hpp"

using namespace nwalk;

TEST_CASE("capability to step mapping") {
    NetworkPath p{{NodeCapability::Encap, NodeCapability::Both, NodeCapability::Decap},
                  {}};
    Walk w = path_to_nsteps(p);
    CHECK(w == Walk{IntSet{1}, IntSet{-1, 1}, IntSet{-1}});
    CHECK(path_to_nsteps({{NodeCapability::Passive}, {}}) == Walk{IntSet{0}});
    CHECK_THROWS_AS(path_to_nsteps({{}, {}}), std::invalid_argument);
    CHECK(capability_from_string("both") == NodeCapability::Both);
    CHECK_THROWS_AS(capability_from_string("proxy"), std::invalid_argument);
}

TEST_CASE("feasibility basics") {
    CHECK(feasibility_check({{NodeCapability::Encap, NodeCapability::Decap}, {}}));
    CHECK_FALSE(feasibility_check(
        {{NodeCapability::Decap, NodeCapability::Encap, NodeCapability::Encap}, {}}));
    CHECK(feasibility_check({{NodeCapability::Encap, NodeCapability::Both,
                              NodeCapability::Both, NodeCapability::Decap},
                             {}}));
}

TEST_CASE("feasibility equals compatible classical excursion existence") {
    testing::Gen gen(77);
    const NodeCapability kinds[] = {NodeCapability::Encap, NodeCapability::Decap,
                                    NodeCapability::Both, NodeCapability::Passive};
    for (int iter = 0; iter < 300; ++iter) {
        NetworkPath p;
        std::int64_t len = gen.range(1, 10);
        for (std::int64_t i = 0; i < len; ++i)
            p.capabilities.push_back(kinds[gen.range(0, 3)]);
        bool expect = testing::compatible_excursions(path_to_nsteps(p)) > 0;
        CHECK(feasibility_check(p) == expect);
    }
}

TEST_CASE("topology ingestion and path queries") {
    Topology t = Topology::from_strings("a b\nb c\nc d\n",
                                        "a ENCAP\nb BOTH\nc BOTH\nd DECAP\n");
    CHECK(t.has_edge("a", "b"));
    CHECK(t.has_edge("b", "a"));
    CHECK_FALSE(t.has_edge("a", "c"));
    NetworkPath p = t.path({"a", "b", "c", "d"});
    CHECK(p.capabilities.size() == 4);
    CHECK(feasibility_check(p));
    CHECK_THROWS_AS(t.path({"a", "c"}), std::invalid_argument);
    CHECK_THROWS_AS(t.path({"a", "b", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(Topology::from_files("/nonexistent", "/nonexistent"),
                    std::runtime_error);
}

TEST_CASE("random feasibility rate against exact DP") {
    std::map<NodeCapability, Rat> dist{{NodeCapability::Encap, Rat(1, 3)},
                                       {NodeCapability::Decap, Rat(1, 3)},
                                       {NodeCapability::Both, Rat(1, 3)}};
    FeasibilityRate r = random_feasibility_rate(dist, 12, 40000, 2718);
    NStepSet S = NStepSet::dyck(Rat(1, 3), Rat(1, 3), Rat(1, 3));
    double exact = to_double(count_by_dp(S, 12, WalkFamily::Excursion)[12]);
    CHECK(std::abs(r.estimate.value - exact) < 4 * r.estimate.stderr_ + 1e-12);
    CHECK(r.theory_reference == "dyck excursion regime 1");
    CHECK(r.theory_value == doctest::Approx(0.25));
}

TEST_CASE("encap-only distribution is infeasible at positive length") {
    std::map<NodeCapability, Rat> dist{{NodeCapability::Encap, Rat(1)}};
    FeasibilityRate r = random_feasibility_rate(dist, 5, 500, 1);
    CHECK(r.estimate.value == 0.0);
}

TEST_CASE("distributions must normalize") {
    std::map<NodeCapability, Rat> dist{{NodeCapability::Encap, Rat(1, 2)}};
    CHECK_THROWS_AS(random_feasibility_rate(dist, 3, 10, 0), std::invalid_argument);
}

TEST_CASE("square-root decay regime carries its label and tracks the formula") {
    std::map<NodeCapability, Rat> dist{{NodeCapability::Encap, Rat(1, 3)},
                                       {NodeCapability::Decap, Rat(1, 2)},
                                       {NodeCapability::Both, Rat(1, 6)}};
    // p_m1 = 1/2 with p_1 < 1/2: the 1/sqrt(n) regime
    FeasibilityRate r100 = random_feasibility_rate(dist, 100, 60000, 11);
    FeasibilityRate r160 = random_feasibility_rate(dist, 160, 60000, 11);
    CHECK(r100.theory_reference == "dyck excursion regime 2");
    CHECK(r100.theory_value > r160.theory_value);  // decaying
    CHECK(std::abs(r100.estimate.value / r100.theory_value - 1) < 0.25);
    CHECK(std::abs(r160.estimate.value / r160.theory_value - 1) < 0.25);
}

TEST_CASE("passive mass disables the dyck reference") {
    std::map<NodeCapability, Rat> dist{{NodeCapability::Encap, Rat(1, 4)},
                                       {NodeCapability::Decap, Rat(1, 4)},
                                       {NodeCapability::Passive, Rat(1, 2)}};
    FeasibilityRate r = random_feasibility_rate(dist, 6, 2000, 5);
    CHECK(r.theory_reference.substr(0, 4) == "none");
}
