#ifndef NWALK_AUTOMATON_HPP
#define NWALK_AUTOMATON_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nwalk/laurent.hpp"
#include "nwalk/series.hpp"
#include "nwalk/step_set.hpp"
#include "nwalk/sumset_type.hpp"
#include "nwalk/walk.hpp"

namespace nwalk {

struct InferCaps {
    std::size_t max_states = 20000;   // distinct reach sets explored
    std::int64_t max_norm = 96;       // reach-set norm bound during BFS
    std::int64_t max_len = 28;        // BFS depth
};

struct InferResult {
    bool ok = false;
    std::vector<SumsetType> types;   // proper, ordered by decreasing g
    std::vector<IntSet> unmatched;   // reach sets no candidate covered
};

// Explores normalized reachable-point sets breadth-first, detects periodic
// structure in the large ones and derives boundary masks, then covers the
// remaining small sets with shift classes. Unmatched sets are reported, not
// guessed around.
InferResult infer_types(const NStepSet& S, const InferCaps& caps = {});

// Deterministic complete automaton over the N-step alphabet whose states are
// proper types; reading a walk lands in the state whose type holds the
// walk's reachable points.
struct TypeAutomaton {
    struct Arrow {
        std::size_t to = 0;
        std::int64_t dmin = 0;
        std::int64_t dmax = 0;
    };

    NStepSet steps;
    std::vector<SumsetType> states;      // ordered by decreasing g
    std::vector<std::int64_t> sigma;     // minimal norm per state
    std::size_t initial = 0;             // state containing {0}
    std::vector<std::vector<Arrow>> trans;  // trans[q][step]
    std::int64_t depth = 0;              // -min over step minima; boundary band

    // Per-state reconstruction data: the instances below the stabilization
    // index (norm-keyed), and the stable min/max offsets from the unpruned
    // base beyond it.
    struct StateMeta {
        std::int64_t jstab = 0;
        std::int64_t norm_stab = 0;
        std::int64_t m0 = 0;  // min offset from the base minimum
        std::int64_t c0 = 0;  // max offset from the base maximum
        std::vector<IntSet> small;  // instances for j in [k, jstab]
    };
    std::vector<StateMeta> meta;

    // Index of the state whose type contains s, trying larger periods first.
    std::optional<std::size_t> match(const IntSet& s) const;

    // The member of state q with the given extremes.
    IntSet set_from_minmax(std::size_t q, std::int64_t min, std::int64_t max) const;
    bool contains_zero(std::size_t q, std::int64_t min, std::int64_t max) const;
};

// Throws std::runtime_error naming the offending (type, step, witness) when
// the provided types do not close under the step set, or when the non-loop
// transition graph of a walk automaton has a cycle.
TypeAutomaton build_automaton(const NStepSet& S, const std::vector<SumsetType>& types);

// Resolves one meander step on a compressed state, materializing the set in
// the boundary band (min < depth) and validating the landing type. Memoizes
// per (state, min, capped norm index, step).
class MeanderStepper {
public:
    explicit MeanderStepper(const TypeAutomaton& aut);

    struct Landing {
        std::size_t to;
        std::int64_t min;
        std::int64_t max;
    };
    // nullopt = the floored set died (absorbing dead state).
    std::optional<Landing> step(std::size_t q, std::int64_t min, std::int64_t max,
                                std::size_t step_index);

    std::int64_t stable_index(std::size_t q) const;

private:
    const TypeAutomaton& aut_;
    std::vector<std::int64_t> stable_;
    std::map<std::tuple<std::size_t, std::int64_t, std::int64_t, std::size_t>,
             std::optional<Landing>>
        memo_;
    std::optional<Landing> resolve(std::size_t q, std::int64_t min,
                                   std::int64_t max, std::size_t step_index);
};

struct TransitionMatrices {
    // A[to][from]; entries carry x^dmin y^dmax with the y^(sigma_from -
    // sigma_to) normalization of the vector functional equation.
    std::vector<std::vector<LaurentPoly>> A;
    // Boundary matrices per minimum ell: B for large maxima, C for the
    // minimal-norm instances.
    std::vector<std::vector<std::vector<LaurentPoly>>> B, C;
};

TransitionMatrices transition_matrices(const TypeAutomaton& aut);

// Machine-readable export of states, generic transitions and boundary rows.
std::string export_transition_system(const TypeAutomaton& aut);

// Per-state truncated series F_q(x,y;t), then the bridge extraction chain:
// drop min>0 and max<0, keep min in -b mod g, exclude min in -a and max in
// c (with the overlap added back). Sums the per-state results at x=y=1.
RationalSeries bridge_series_from_automaton(const TypeAutomaton& aut,
                                            std::int64_t order);

}  // namespace nwalk

#endif
