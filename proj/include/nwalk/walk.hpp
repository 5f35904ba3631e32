#ifndef NWALK_WALK_HPP
#define NWALK_WALK_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "nwalk/rational.hpp"
#include "nwalk/step_set.hpp"

namespace nwalk {

using Walk = std::vector<IntSet>;

// Reachable points of an N-walk: the unconstrained set (all compatible
// walks) and the floored set (all compatible meanders).
struct ReachState {
    IntSet unconstrained{0};
    IntSet floored{0};
    std::int64_t length = 0;
};

// One N-step: unconstrained picks up the sumset, the floor is applied to the
// meander component after the full step.
ReachState step_reach(const ReachState& state, const IntSet& s);

struct WalkClass {
    bool is_bridge = false;
    bool is_meander = false;
    bool is_excursion = false;

    bool operator==(const WalkClass& o) const = default;
};

WalkClass classify_walk(const Walk& walk);

// Weighted class totals of every length-n walk over S, by exhaustive
// enumeration. Independent of the DP path; the budget caps the number of
// step applications (default 1e8) and a breach throws std::runtime_error.
struct OracleTallies {
    Rat walks = 0;
    Rat bridges = 0;
    Rat meanders = 0;
    Rat excursions = 0;
    std::uint64_t walk_count = 0;
};

OracleTallies enumerate_oracle(const NStepSet& S, std::int64_t n,
                               std::uint64_t step_budget = 100000000);

// Exhaustive listing for small n; each entry is (step indices, class).
std::vector<std::pair<std::vector<std::size_t>, WalkClass>> enumerate_walks(
    const NStepSet& S, std::int64_t n, std::uint64_t step_budget = 100000000);

// All distinct reachable-point sets by length (0..n), unconstrained or
// floored; used to validate reach-set shape claims and type inference.
std::vector<std::vector<IntSet>> collect_reach_sets(const NStepSet& S,
                                                    std::int64_t n,
                                                    bool floored);

}  // namespace nwalk

#endif
