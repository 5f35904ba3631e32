#include "nwalk/step_set.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nwalk {

NStepSet::NStepSet(std::vector<std::pair<IntSet, Rat>> steps) {
    std::map<IntSet, Rat> agg;
    for (auto& [s, w] : steps) {
        if (s.empty()) throw std::invalid_argument("N-steps must be nonempty");
        if (w < 0) throw std::invalid_argument("step weights must be nonnegative");
        agg[s] += w;
    }
    steps_.assign(agg.begin(), agg.end());
}

Rat NStepSet::total_weight() const {
    Rat t = 0;
    for (auto& [s, w] : steps_) t += w;
    return t;
}

bool NStepSet::unit_weights() const {
    return std::all_of(steps_.begin(), steps_.end(),
                       [](const auto& p) { return p.second == 1; });
}

std::int64_t NStepSet::max_depth() const {
    std::int64_t d = 0;
    for (auto& [s, w] : steps_) d = std::max(d, -s.min());
    return d;
}

std::int64_t NStepSet::max_rise() const {
    std::int64_t d = 0;
    for (auto& [s, w] : steps_) d = std::max(d, s.max());
    return d;
}

std::int64_t NStepSet::max_norm() const {
    std::int64_t d = 0;
    for (auto& [s, w] : steps_) d = std::max(d, s.norm());
    return d;
}

std::vector<std::pair<std::int64_t, Rat>> NStepSet::top_step_weights() const {
    std::map<std::int64_t, Rat> q;
    for (auto& [s, w] : steps_) q[s.max()] += w;
    return {q.begin(), q.end()};
}

NStepSet NStepSet::parse(const std::string& steps_text, const std::string& weights_text) {
    std::vector<IntSet> sets;
    std::stringstream in(steps_text);
    std::string item;
    while (std::getline(in, item, ';')) sets.push_back(IntSet::parse(item));
    if (sets.empty()) throw std::invalid_argument("empty step-set string");

    std::vector<Rat> weights;
    if (weights_text.empty()) {
        weights.assign(sets.size(), Rat(1));
    } else {
        std::stringstream win(weights_text);
        while (std::getline(win, item, ',')) weights.push_back(parse_rat(item));
        if (weights.size() != sets.size())
            throw std::invalid_argument("weights count does not match steps count");
    }
    std::vector<std::pair<IntSet, Rat>> steps;
    for (std::size_t i = 0; i < sets.size(); ++i)
        steps.emplace_back(sets[i], weights[i]);
    return NStepSet(std::move(steps));
}

NStepSet NStepSet::dyck(const Rat& p_m1, const Rat& p_p1, const Rat& p_m1p1) {
    return NStepSet({{IntSet{-1}, p_m1}, {IntSet{1}, p_p1}, {IntSet{-1, 1}, p_m1p1}});
}

NStepSet NStepSet::dyck_unweighted() { return dyck(1, 1, 1); }

NStepSet NStepSet::motzkin(const std::vector<Rat>& w) {
    if (w.size() != 7) throw std::invalid_argument("motzkin needs 7 weights");
    return NStepSet({{IntSet{1}, w[0]},
                     {IntSet{-1}, w[1]},
                     {IntSet{0}, w[2]},
                     {IntSet{-1, 0}, w[3]},
                     {IntSet{0, 1}, w[4]},
                     {IntSet{-1, 1}, w[5]},
                     {IntSet{-1, 0, 1}, w[6]}});
}

NStepSet NStepSet::motzkin_unweighted() {
    return motzkin({1, 1, 1, 1, 1, 1, 1});
}

}  // namespace nwalk
