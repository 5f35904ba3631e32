#include "nwalk/automaton.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nwalk {

namespace {

std::int64_t pos_mod(std::int64_t x, std::int64_t g) { return ((x % g) + g) % g; }

// Attempts to read a set (normalized to min 0) as a member of a periodic
// proper type: detect the period of the middle, anchor the pattern, and
// collect the boundary deviations as pruning masks.
std::optional<SumsetType> infer_periodic(const IntSet& s) {
    std::int64_t N = s.norm();
    std::int64_t W = N / 3;
    if (W < 1) return std::nullopt;
    for (std::int64_t g = 1; g <= W; ++g) {
        std::set<std::int64_t> residues;
        for (auto x : s)
            if (x >= W && x <= N - W) residues.insert(pos_mod(x, g));
        if (residues.empty()) continue;
        bool periodic = true;
        for (std::int64_t x = W; x <= N - W && periodic; ++x)
            if (s.contains(x) != residues.count(pos_mod(x, g))) periodic = false;
        if (!periodic) continue;
        // base cannot cover elements outside the residue pattern
        bool covered = true;
        for (auto x : s)
            if (!residues.count(pos_mod(x, g))) covered = false;
        if (!covered) continue;

        std::optional<SumsetType> best;
        for (std::int64_t r0 : residues) {
            std::int64_t m = r0 == 0 ? 0 : r0 - g;  // base minimum, in (-g, 0]
            std::vector<std::int64_t> bv;
            for (auto r : residues) bv.push_back(pos_mod(r - m, g));
            IntSet b(std::move(bv));
            if (b.min() != 0) continue;
            std::int64_t dtop = pos_mod(b.max() + m - N, g);
            std::int64_t top = N + dtop;
            if ((top - m - b.max()) % g != 0) continue;
            std::int64_t j = (top - m - b.max()) / g;
            if (j < 0) continue;
            IntSet base = sumset(nfold_sumset(j, IntSet{0, g}), b).shifted(m);
            IntSet dropped = base.minus(s);
            bool feasible = std::includes(base.begin(), base.end(), s.begin(), s.end());
            std::vector<std::int64_t> av, cv;
            for (auto x : dropped) {
                if (x < W)
                    av.push_back(x - m);
                else if (x > N - W)
                    cv.push_back(top - x);
                else
                    feasible = false;
            }
            if (!feasible) continue;
            SumsetType t{g, 0, IntSet(std::move(av)), b, IntSet(std::move(cv))};
            while (t.k * g <= max_or_minus_one(t.a) + max_or_minus_one(t.c)) ++t.k;
            if (!is_proper(t) || !type_member(t, s)) continue;
            auto mass = [](const SumsetType& x) {
                return x.a.size() + x.c.size();
            };
            if (!best || mass(t) < mass(*best)) best = t;
        }
        if (best) return best;
    }
    return std::nullopt;
}

std::optional<std::size_t> match_in(const std::vector<SumsetType>& types,
                                    const IntSet& s) {
    for (std::size_t i = 0; i < types.size(); ++i)
        if (type_member(types[i], s)) return i;
    return std::nullopt;
}

void sort_types(std::vector<SumsetType>& types) {
    std::stable_sort(types.begin(), types.end(),
                     [](const SumsetType& x, const SumsetType& y) { return x.g > y.g; });
}

// Representative instances used to validate a transition: one period above
// the minimum plus two more.
std::vector<std::int64_t> walk_rep_indices(const SumsetType& t) {
    if (t.g == 0) return {t.k};
    return {t.k, t.k + 1, t.k + 2};
}

}  // namespace

InferResult infer_types(const NStepSet& S, const InferCaps& caps) {
    InferResult res;

    // Phase 1: collect shift-normalized reachable sets breadth-first.
    std::set<IntSet> seen;
    std::vector<IntSet> frontier{IntSet{0}};
    seen.insert(IntSet{0});
    std::int64_t max_norm_seen = 0;
    for (std::int64_t len = 0; len < caps.max_len && !frontier.empty(); ++len) {
        std::vector<IntSet> next;
        for (auto& r : frontier) {
            for (std::size_t i = 0; i < S.size(); ++i) {
                IntSet u = shift_to_zero(sumset(r, S.step(i)));
                if (u.norm() > caps.max_norm) continue;
                if (seen.size() >= caps.max_states) break;
                if (seen.insert(u).second) {
                    next.push_back(u);
                    max_norm_seen = std::max(max_norm_seen, u.norm());
                }
            }
        }
        frontier = std::move(next);
    }

    // Phase 1b: also walk the floored reach sets so meander boundary states
    // have covering types. The floored family can genuinely be infinite; on
    // cap overrun its sets are dropped and the meander stepper will surface
    // any gap itself.
    {
        std::set<IntSet> fseen{IntSet{0}};
        std::vector<IntSet> ffrontier{IntSet{0}};
        bool overrun = false;
        for (std::int64_t len = 0; len < caps.max_len && !ffrontier.empty() && !overrun;
             ++len) {
            std::vector<IntSet> next;
            for (auto& r : ffrontier) {
                for (std::size_t i = 0; i < S.size(); ++i) {
                    IntSet u = sumset(r, S.step(i)).nonnegative_part();
                    if (u.empty() || u.norm() > caps.max_norm) continue;
                    if (fseen.size() >= caps.max_states) {
                        overrun = true;
                        break;
                    }
                    if (fseen.insert(u).second) next.push_back(u);
                }
            }
            ffrontier = std::move(next);
        }
        if (!overrun) {
            for (auto& u : fseen) {
                IntSet z = shift_to_zero(u);
                if (seen.insert(z).second)
                    max_norm_seen = std::max(max_norm_seen, z.norm());
            }
        }
    }

    // Phase 2+3: cover by descending norm; infer periodic candidates from the
    // large sets, shift classes for the small remainder.
    std::vector<IntSet> ordered(seen.begin(), seen.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const IntSet& x, const IntSet& y) { return x.norm() > y.norm(); });
    std::int64_t periodic_floor = std::max<std::int64_t>(9, max_norm_seen / 2);

    std::vector<SumsetType> types;
    std::vector<std::vector<std::int64_t>> observed_j(0);
    auto note_j = [&](std::size_t idx, const IntSet& s) {
        const SumsetType& t = types[idx];
        if (t.g == 0 || t.b.empty()) return;
        IntSet rk = type_instance(t, t.k, 0);
        std::int64_t diff = s.norm() - rk.norm();
        if (diff >= 0 && diff % t.g == 0) observed_j[idx].push_back(t.k + diff / t.g);
    };

    for (auto& s : ordered) {
        if (auto m = match_in(types, s)) {
            note_j(*m, s);
            continue;
        }
        if (s.norm() >= periodic_floor) {
            if (auto cand = infer_periodic(s)) {
                types.push_back(*cand);
                observed_j.emplace_back();
                sort_types(types);
                observed_j.assign(types.size(), {});
                // re-scan previously covered sets is unnecessary: coverage is
                // re-derived below after the full pass
                continue;
            }
            res.unmatched.push_back(s);
            continue;
        }
        types.push_back(SumsetType{0, 0, {}, shift_to_zero(s), {}});
        observed_j.emplace_back();
        sort_types(types);
        observed_j.assign(types.size(), {});
    }
    if (!res.unmatched.empty()) return res;

    // Drop shift-class types swallowed by the periodic ones, then lift each
    // periodic k to the smallest observed index.
    sort_types(types);
    std::vector<SumsetType> kept;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (types[i].g == 0) {
            bool redundant = false;
            for (auto& t : types)
                if (t.g > 0 && type_member(t, types[i].b)) redundant = true;
            if (redundant) continue;
        }
        kept.push_back(types[i]);
    }
    types = std::move(kept);

    observed_j.assign(types.size(), {});
    for (auto& s : ordered) {
        if (auto m = match_in(types, s)) note_j(*m, s);
    }
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (types[i].g == 0 || observed_j[i].empty()) continue;
        std::int64_t jmin = *std::min_element(observed_j[i].begin(), observed_j[i].end());
        types[i].k = std::max(types[i].k, jmin);
    }

    // Phase 4: closure extension. Step every type's representatives; landing
    // sets must be covered by a single type consistently across indices.
    // Uncovered landings spawn new types; an inconsistent low index means the
    // type starts too early, so its k is raised and the dropped instance is
    // re-covered on the next round.
    auto cover_set = [&](const IntSet& u) -> bool {
        if (match_in(types, u)) return true;
        std::optional<SumsetType> cand;
        if (u.norm() >= periodic_floor) cand = infer_periodic(u);
        if (cand) {
            types.push_back(*cand);
        } else if (u.norm() < periodic_floor) {
            types.push_back(SumsetType{0, 0, {}, u, {}});
        } else {
            return false;
        }
        sort_types(types);
        return types.size() <= 512;
    };

    for (int round = 0; round < 256; ++round) {
        bool changed = false;
        for (std::size_t qi = 0; qi < types.size() && !changed; ++qi) {
            SumsetType& t = types[qi];
            for (std::size_t i = 0; i < S.size() && !changed; ++i) {
                std::optional<std::size_t> landing;
                bool consistent = true;
                for (auto j : walk_rep_indices(t)) {
                    IntSet rep = type_instance(t, j, 0);
                    if (rep.empty()) continue;
                    IntSet u = shift_to_zero(sumset(rep, S.step(i)));
                    auto m = match_in(types, u);
                    if (!m) {
                        if (!cover_set(u)) {
                            res.unmatched.push_back(u);
                            return res;
                        }
                        changed = true;
                        break;
                    }
                    if (landing && *landing != *m) consistent = false;
                    landing = m;
                }
                if (changed) break;
                if (!consistent) {
                    // the k-th instance behaves differently: push it out of
                    // this family and cover it separately
                    IntSet dropped = shift_to_zero(type_instance(t, t.k, 0));
                    if (t.k > 24) {
                        res.unmatched.push_back(dropped);
                        return res;
                    }
                    t.k += 1;
                    changed = true;
                    if (!dropped.empty() && !cover_set(dropped)) {
                        res.unmatched.push_back(dropped);
                        return res;
                    }
                }
            }
        }
        if (!changed) {
            res.ok = true;
            res.types = types;
            return res;
        }
    }
    res.unmatched.push_back(IntSet{});
    return res;
}

std::optional<std::size_t> TypeAutomaton::match(const IntSet& s) const {
    return match_in(states, s);
}

IntSet TypeAutomaton::set_from_minmax(std::size_t q, std::int64_t min,
                                      std::int64_t max) const {
    const SumsetType& t = states[q];
    if (t.b.empty()) throw std::logic_error("set_from_minmax on the empty family");
    if (t.g == 0) {
        if (t.b.norm() != max - min)
            throw std::logic_error("set_from_minmax: norm mismatch");
        return t.b.shifted(min - t.b.min());
    }
    const StateMeta& md = meta[q];
    std::int64_t norm = max - min;
    for (const auto& inst : md.small)
        if (inst.norm() == norm) return inst.shifted(min - inst.min());
    std::int64_t diff = norm - md.norm_stab;
    if (diff <= 0 || diff % t.g != 0)
        throw std::logic_error("set_from_minmax: norm not in family");
    IntSet r = type_instance(t, md.jstab + diff / t.g, 0);
    return r.shifted(min - r.min());
}

bool TypeAutomaton::contains_zero(std::size_t q, std::int64_t min,
                                  std::int64_t max) const {
    if (min > 0 || max < 0) return false;
    const SumsetType& t = states[q];
    if (t.b.empty()) return false;
    if (t.g == 0) return t.b.contains(t.b.min() - min);
    const StateMeta& md = meta[q];
    std::int64_t norm = max - min;
    if (norm <= md.norm_stab) {
        for (const auto& inst : md.small)
            if (inst.norm() == norm) return inst.contains(inst.min() - min);
        if (norm < md.norm_stab) return false;
    }
    // regular regime: offsets from the unpruned base are constant
    std::int64_t p = md.m0 - min;  // position of 0 relative to the base minimum
    std::int64_t beta = pos_mod(p, t.g);
    if (!t.b.contains(beta)) return false;
    if (max + md.c0 < t.b.max() - beta) return false;  // beyond the base top
    if (t.a.contains(p)) return false;
    if (t.c.contains(max + md.c0)) return false;
    return true;
}

TypeAutomaton build_automaton(const NStepSet& S, const std::vector<SumsetType>& types) {
    TypeAutomaton aut;
    aut.steps = S;
    aut.states = types;
    sort_types(aut.states);
    aut.depth = S.max_depth();

    for (auto& t : aut.states) {
        if (!is_proper(t))
            throw std::runtime_error("build_automaton: type " + t.to_string() +
                                     " is not proper");
        aut.sigma.push_back(t.b.empty() ? 0 : type_instance(t, t.k, 0).norm());

        TypeAutomaton::StateMeta md;
        if (t.g > 0 && !t.b.empty()) {
            md.jstab = type_stable_index(t);
            std::int64_t prev = -1;
            for (std::int64_t j = t.k; j <= md.jstab; ++j) {
                md.small.push_back(type_instance(t, j, 0));
                if (md.small.back().norm() <= prev)
                    throw std::runtime_error(
                        "build_automaton: norms not strictly increasing in " +
                        t.to_string());
                prev = md.small.back().norm();
            }
            const IntSet& rs = md.small.back();
            md.norm_stab = rs.norm();
            md.m0 = rs.min();
            md.c0 = md.jstab * t.g + t.b.max() - rs.max();
        }
        aut.meta.push_back(md);
    }

    auto init = aut.match(IntSet{0});
    if (!init)
        throw std::runtime_error("build_automaton: no type contains {0}");
    aut.initial = *init;

    aut.trans.assign(aut.states.size(), {});
    for (std::size_t q = 0; q < aut.states.size(); ++q) {
        const SumsetType& t = aut.states[q];
        for (std::size_t i = 0; i < S.size(); ++i) {
            const IntSet& s = S.step(i);
            std::optional<std::size_t> to;
            for (auto j : walk_rep_indices(t)) {
                IntSet rep = type_instance(t, j, 0);
                if (rep.empty()) {
                    to = q;  // the empty family is absorbing
                    continue;
                }
                IntSet u = sumset(rep, s);
                auto m = aut.match(u);
                if (!m)
                    throw std::runtime_error(
                        "build_automaton: types not closed: type " + t.to_string() +
                        " + step " + s.to_string() + " -> unmatched " + u.to_string());
                if (to && *to != *m)
                    throw std::runtime_error(
                        "build_automaton: inconsistent landing type for " +
                        t.to_string() + " + " + s.to_string());
                to = *m;
            }
            aut.trans[q].push_back({*to, s.min(), s.max()});
        }
    }

    // Loops removed, the walk transition graph must be acyclic.
    std::vector<int> color(aut.states.size(), 0);
    auto dfs = [&](auto&& self, std::size_t v) -> void {
        color[v] = 1;
        for (auto& ar : aut.trans[v]) {
            if (ar.to == v) continue;
            if (color[ar.to] == 1)
                throw std::runtime_error("build_automaton: non-loop cycle through " +
                                         aut.states[v].to_string());
            if (color[ar.to] == 0) self(self, ar.to);
        }
        color[v] = 2;
    };
    for (std::size_t v = 0; v < aut.states.size(); ++v)
        if (color[v] == 0) dfs(dfs, v);

    return aut;
}

MeanderStepper::MeanderStepper(const TypeAutomaton& aut) : aut_(aut) {
    for (std::size_t q = 0; q < aut_.states.size(); ++q) {
        const SumsetType& t = aut_.states[q];
        if (t.g == 0 || t.b.empty()) {
            stable_.push_back(t.k);
            continue;
        }
        std::int64_t window = aut_.depth + max_or_minus_one(t.a) +
                              max_or_minus_one(t.b) + max_or_minus_one(t.c) +
                              aut_.steps.max_norm() + 3 * t.g + 2;
        stable_.push_back(t.k + window / t.g + 2);
    }
}

std::int64_t MeanderStepper::stable_index(std::size_t q) const { return stable_[q]; }

std::optional<MeanderStepper::Landing> MeanderStepper::resolve(
    std::size_t q, std::int64_t min, std::int64_t max, std::size_t i) {
    IntSet cur = aut_.set_from_minmax(q, min, max);
    IntSet next = sumset(cur, aut_.steps.step(i)).nonnegative_part();
    if (next.empty()) return std::nullopt;
    auto m = aut_.match(next);
    if (!m)
        throw std::runtime_error(
            "meander automaton not closed: state " + aut_.states[q].to_string() +
            " at min=" + std::to_string(min) + " + step " +
            aut_.steps.step(i).to_string() + " -> unmatched " + next.to_string());
    return Landing{*m, next.min(), next.max()};
}

std::optional<MeanderStepper::Landing> MeanderStepper::step(std::size_t q,
                                                            std::int64_t min,
                                                            std::int64_t max,
                                                            std::size_t i) {
    if (min >= aut_.depth) {
        const auto& ar = aut_.trans[q][i];
        return Landing{ar.to, min + ar.dmin, max + ar.dmax};
    }
    const SumsetType& t = aut_.states[q];
    std::int64_t j = t.k;
    if (t.g > 0 && !t.b.empty()) {
        const auto& md = aut_.meta[q];
        std::int64_t norm = max - min;
        if (norm <= md.norm_stab) {
            for (std::size_t i = 0; i < md.small.size(); ++i)
                if (md.small[i].norm() == norm) j = t.k + static_cast<std::int64_t>(i);
        } else {
            j = md.jstab + (norm - md.norm_stab) / t.g;
        }
    }
    std::int64_t jcap = std::min(j, stable_[q]);
    auto key = std::make_tuple(q, min, jcap, i);
    auto it = memo_.find(key);
    if (it == memo_.end()) {
        auto landing = resolve(q, min, max, i);
        if (jcap == stable_[q]) {
            // The landing must be j-independent from here on; check two more.
            for (std::int64_t extra = 1; extra <= 2; ++extra) {
                std::int64_t m2 = max + extra * t.g;
                auto check = resolve(q, min, m2, i);
                bool same = check.has_value() == landing.has_value() &&
                            (!landing || (check->to == landing->to &&
                                          check->min == landing->min &&
                                          check->max - extra * t.g == landing->max));
                if (!same)
                    throw std::runtime_error(
                        "meander boundary not stable for state " +
                        aut_.states[q].to_string() + " at min=" + std::to_string(min));
            }
        }
        // store max-relative
        std::optional<Landing> rel;
        if (landing) rel = Landing{landing->to, landing->min, landing->max - max};
        it = memo_.emplace(key, rel).first;
    }
    if (!it->second) return std::nullopt;
    Landing out = *it->second;
    out.max += max;
    return out;
}

TransitionMatrices transition_matrices(const TypeAutomaton& aut) {
    std::size_t n = aut.states.size();
    TransitionMatrices tm;
    tm.A.assign(n, std::vector<LaurentPoly>(n));
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t i = 0; i < aut.steps.size(); ++i) {
            const auto& ar = aut.trans[q][i];
            tm.A[ar.to][q].add_term(aut.steps.weight(i), ar.dmin,
                                    ar.dmax + aut.sigma[q] - aut.sigma[ar.to]);
        }
    }

    MeanderStepper stepper(aut);
    std::int64_t band = aut.depth;
    tm.B.assign(static_cast<std::size_t>(band + 1),
                std::vector<std::vector<LaurentPoly>>(n, std::vector<LaurentPoly>(n)));
    tm.C = tm.B;
    for (std::int64_t ell = 0; ell <= band; ++ell) {
        for (std::size_t q = 0; q < n; ++q) {
            const SumsetType& t = aut.states[q];
            if (t.b.empty()) continue;
            // large-maximum representative
            std::int64_t jbig = stepper.stable_index(q) + 1;
            IntSet big = type_instance(t, jbig, 0);
            std::int64_t bigmax = ell + big.norm();
            // minimal-norm representative
            std::int64_t smallmax = ell + aut.sigma[q];
            for (std::size_t i = 0; i < aut.steps.size(); ++i) {
                if (auto l = stepper.step(q, ell, bigmax, i))
                    tm.B[static_cast<std::size_t>(ell)][l->to][q].add_term(
                        aut.steps.weight(i), l->min - ell,
                        l->max - bigmax + aut.sigma[q] - aut.sigma[l->to]);
                if (auto l = stepper.step(q, ell, smallmax, i))
                    tm.C[static_cast<std::size_t>(ell)][l->to][q].add_term(
                        aut.steps.weight(i), l->min - ell,
                        l->max - smallmax + aut.sigma[q] - aut.sigma[l->to]);
            }
        }
    }
    return tm;
}

std::string export_transition_system(const TypeAutomaton& aut) {
    std::ostringstream out;
    out << "{\n  \"states\": [";
    for (std::size_t q = 0; q < aut.states.size(); ++q) {
        const SumsetType& t = aut.states[q];
        if (q) out << ",";
        out << "\n    {\"g\": " << t.g << ", \"k\": " << t.k << ", \"a\": \""
            << t.a.to_string() << "\", \"b\": \"" << t.b.to_string()
            << "\", \"c\": \"" << t.c.to_string() << "\", \"sigma\": " << aut.sigma[q]
            << "}";
    }
    out << "\n  ],\n  \"initial\": " << aut.initial << ",\n  \"transitions\": [";
    bool first = true;
    for (std::size_t q = 0; q < aut.states.size(); ++q) {
        for (std::size_t i = 0; i < aut.steps.size(); ++i) {
            const auto& ar = aut.trans[q][i];
            if (!first) out << ",";
            first = false;
            out << "\n    {\"from\": " << q << ", \"step\": \""
                << aut.steps.step(i).to_string() << "\", \"to\": " << ar.to
                << ", \"dmin\": " << ar.dmin << ", \"dmax\": " << ar.dmax << "}";
        }
    }
    out << "\n  ],\n  \"boundary\": [";
    first = true;
    try {
        MeanderStepper stepper(aut);
    auto row = [&](std::int64_t ell, std::size_t q, std::size_t i,
                   const MeanderStepper::Landing& l, std::int64_t frommax,
                   const char* kind) {
        if (!first) out << ",";
        first = false;
        out << "\n    {\"ell\": " << ell << ", \"from\": " << q << ", \"step\": \""
            << aut.steps.step(i).to_string() << "\", \"to\": " << l.to
            << ", \"dmin\": " << l.min - ell << ", \"dmax\": " << l.max - frommax
            << ", \"max_kind\": \"" << kind << "\"}";
    };
        for (std::int64_t ell = 0; ell <= aut.depth; ++ell) {
            for (std::size_t q = 0; q < aut.states.size(); ++q) {
                const SumsetType& t = aut.states[q];
                if (t.b.empty()) continue;
                std::int64_t bigmax =
                    ell + type_instance(t, stepper.stable_index(q) + 1, 0).norm();
                std::int64_t smallmax = ell + aut.sigma[q];
                for (std::size_t i = 0; i < aut.steps.size(); ++i) {
                    if (auto l = stepper.step(q, ell, bigmax, i))
                        row(ell, q, i, *l, bigmax, "large");
                    if (auto l = stepper.step(q, ell, smallmax, i))
                        row(ell, q, i, *l, smallmax, "minimal");
                }
            }
        }
        out << "\n  ]\n}\n";
    } catch (const std::exception& e) {
        out << "\n  ],\n  \"boundary_error\": \"" << e.what() << "\"\n}\n";
    }
    return out.str();
}

RationalSeries bridge_series_from_automaton(const TypeAutomaton& aut,
                                            std::int64_t order) {
    std::size_t n = aut.states.size();
    std::vector<BivariateSeries> F(n, BivariateSeries(order));
    if (order == 0) return RationalSeries::zero(0);
    F[aut.initial].coeff(0) = LaurentPoly::constant(1);
    for (std::int64_t len = 1; len < order; ++len) {
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t i = 0; i < aut.steps.size(); ++i) {
                const auto& ar = aut.trans[q][i];
                if (F[q].coeff(len - 1).is_zero()) continue;
                LaurentPoly moved =
                    F[q].coeff(len - 1) *
                    LaurentPoly::monomial(aut.steps.weight(i), ar.dmin, ar.dmax);
                F[ar.to].coeff(len) = F[ar.to].coeff(len) + moved;
            }
        }
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(order), Rat(0));
    for (std::size_t q = 0; q < n; ++q) {
        for (std::int64_t len = 0; len < order; ++len) {
            for (auto& [e, c] : F[q].coeff(len).terms()) {
                if (aut.contains_zero(q, e.first, e.second))
                    coeffs[static_cast<std::size_t>(len)] += c;
            }
        }
    }
    return RationalSeries::poly(std::move(coeffs), order);
}

}  // namespace nwalk
