#ifndef NWALK_STEP_SET_HPP
#define NWALK_STEP_SET_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nwalk/int_set.hpp"
#include "nwalk/rational.hpp"

namespace nwalk {

// A finite collection of N-steps with exact nonnegative rational weights.
// Duplicate step sets aggregate their weights; empty steps are rejected.
class NStepSet {
public:
    NStepSet() = default;
    NStepSet(std::vector<std::pair<IntSet, Rat>> steps);

    std::size_t size() const { return steps_.size(); }
    const IntSet& step(std::size_t i) const { return steps_[i].first; }
    const Rat& weight(std::size_t i) const { return steps_[i].second; }
    const std::vector<std::pair<IntSet, Rat>>& steps() const { return steps_; }

    Rat total_weight() const;
    bool unit_weights() const;

    // Most negative step element over the set, as a nonnegative depth
    // ("c" in the boundary tables); 0 when no step goes below zero.
    std::int64_t max_depth() const;
    std::int64_t max_rise() const;
    std::int64_t max_norm() const;

    // Multiset of step maxima with aggregated weights q_j; drives the
    // classical top-path counts of meanders.
    std::vector<std::pair<std::int64_t, Rat>> top_step_weights() const;

    // "{-1};{1};{-1,1}" with optional "1/2,1/3,1/6" positional weights.
    static NStepSet parse(const std::string& steps_text,
                          const std::string& weights_text = "");

    static NStepSet dyck(const Rat& p_m1, const Rat& p_p1, const Rat& p_m1p1);
    static NStepSet dyck_unweighted();
    static NStepSet motzkin_unweighted();
    // The seven Motzkin N-steps with the given weights, ordered
    // p1, p_m1, p0, p_m10, p_01, p_m11, p_m101 (zero weights kept).
    static NStepSet motzkin(const std::vector<Rat>& w);

private:
    std::vector<std::pair<IntSet, Rat>> steps_;
};

}  // namespace nwalk

#endif
