#include "nwalk/walk.hpp"

#include <set>
#include <stdexcept>

namespace nwalk {

ReachState step_reach(const ReachState& state, const IntSet& s) {
    ReachState next;
    next.unconstrained = sumset(state.unconstrained, s);
    next.floored = sumset(state.floored, s).nonnegative_part();
    next.length = state.length + 1;
    return next;
}

WalkClass classify_walk(const Walk& walk) {
    ReachState st;
    bool alive = true;
    for (const auto& s : walk) {
        st = step_reach(st, s);
        if (st.floored.empty()) alive = false;
    }
    WalkClass c;
    c.is_bridge = st.unconstrained.contains(0);
    c.is_meander = alive;
    c.is_excursion = alive && st.floored.contains(0);
    return c;
}

namespace {

struct OracleRun {
    const NStepSet& S;
    std::int64_t n;
    std::uint64_t budget;
    std::uint64_t used = 0;
    OracleTallies tallies;
    std::vector<std::size_t> prefix;
    std::vector<std::pair<std::vector<std::size_t>, WalkClass>>* listing = nullptr;

    void dfs(const ReachState& state, bool alive, const Rat& weight) {
        if (state.length == n) {
            WalkClass c;
            c.is_bridge = state.unconstrained.contains(0);
            c.is_meander = alive;
            c.is_excursion = alive && state.floored.contains(0);
            tallies.walks += weight;
            if (c.is_bridge) tallies.bridges += weight;
            if (c.is_meander) tallies.meanders += weight;
            if (c.is_excursion) tallies.excursions += weight;
            ++tallies.walk_count;
            if (listing) listing->emplace_back(prefix, c);
            return;
        }
        for (std::size_t i = 0; i < S.size(); ++i) {
            if (++used > budget)
                throw std::runtime_error("enumerate_oracle: step budget exceeded");
            ReachState next = step_reach(state, S.step(i));
            prefix.push_back(i);
            dfs(next, alive && !next.floored.empty(), weight * S.weight(i));
            prefix.pop_back();
        }
    }
};

}  // namespace

OracleTallies enumerate_oracle(const NStepSet& S, std::int64_t n,
                               std::uint64_t step_budget) {
    OracleRun run{S, n, step_budget};
    run.dfs(ReachState{}, true, Rat(1));
    return run.tallies;
}

std::vector<std::pair<std::vector<std::size_t>, WalkClass>> enumerate_walks(
    const NStepSet& S, std::int64_t n, std::uint64_t step_budget) {
    std::vector<std::pair<std::vector<std::size_t>, WalkClass>> out;
    OracleRun run{S, n, step_budget};
    run.listing = &out;
    run.dfs(ReachState{}, true, Rat(1));
    return out;
}

std::vector<std::vector<IntSet>> collect_reach_sets(const NStepSet& S,
                                                    std::int64_t n, bool floored) {
    std::vector<std::vector<IntSet>> out;
    std::set<IntSet> layer{IntSet{0}};
    out.push_back({layer.begin(), layer.end()});
    for (std::int64_t len = 1; len <= n; ++len) {
        std::set<IntSet> next;
        for (const auto& r : layer) {
            for (std::size_t i = 0; i < S.size(); ++i) {
                IntSet u = sumset(r, S.step(i));
                if (floored) u = u.nonnegative_part();
                if (floored && u.empty()) continue;
                next.insert(u);
            }
        }
        out.push_back({next.begin(), next.end()});
        layer = std::move(next);
    }
    return out;
}

}  // namespace nwalk
