#include <doctest.h>

#include <json.hpp>

#include "nwalk/rational.hpp"
#include "nwalk/series.hpp"
#include "nwalk/step_set.hpp"

using namespace nwalk;

TEST_CASE("rational literals") {
    CHECK(parse_rat("1/3") == Rat(1, 3));
    CHECK(parse_rat("2/6") == Rat(1, 3));
    CHECK(parse_rat("-4") == Rat(-4));
    CHECK(parse_rat(" 5 / 10 ") == Rat(1, 2));
    CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
}

TEST_CASE("step set grammar") {
    NStepSet s = NStepSet::parse("{-1};{1};{-1,1}", "1/2,1/3,1/6");
    CHECK(s.size() == 3);
    CHECK(s.total_weight() == 1);
    CHECK_THROWS_AS(NStepSet::parse("{-1};{1}", "1/2"), std::invalid_argument);
    CHECK_THROWS_AS(NStepSet::parse("{}"), std::invalid_argument);
    CHECK_THROWS_AS(NStepSet::parse(""), std::invalid_argument);
    // duplicate steps aggregate
    NStepSet dup = NStepSet::parse("{1};{1}", "1/2,1/2");
    CHECK(dup.size() == 1);
    CHECK(dup.weight(0) == 1);
    // negative weights rejected
    CHECK_THROWS_AS(NStepSet::parse("{1}", "-1"), std::invalid_argument);
}

TEST_CASE("series JSON re-parses under the published schema") {
    RationalSeries s = RationalSeries(1, {Rat(1, 3), Rat(0), Rat(-2)}, 5);
    nlohmann::json j = nlohmann::json::parse(s.to_json());
    CHECK(j["valuation"] == 1);
    REQUIRE(j["coefficients"].size() == 3);
    CHECK(j["coefficients"][0] == "1/3");
    CHECK(j["coefficients"][2] == "-2");
    // coefficients round-trip through the rational parser
    for (auto& c : j["coefficients"])
        (void)parse_rat(c.get<std::string>());
}

TEST_CASE("top-step multiset") {
    NStepSet s = NStepSet::motzkin_unweighted();
    auto st = s.top_step_weights();
    REQUIRE(st.size() == 3);
    CHECK(st[0] == std::pair<std::int64_t, Rat>{-1, Rat(1)});
    CHECK(st[1] == std::pair<std::int64_t, Rat>{0, Rat(2)});
    CHECK(st[2] == std::pair<std::int64_t, Rat>{1, Rat(4)});
    CHECK(s.max_depth() == 1);
    CHECK(s.max_rise() == 1);
    CHECK(s.max_norm() == 2);
}
