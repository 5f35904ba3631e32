#ifndef NWALK_COUNT_HPP
#define NWALK_COUNT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "nwalk/automaton.hpp"
#include "nwalk/rational.hpp"
#include "nwalk/step_set.hpp"

namespace nwalk {

// MinPositive / MaxNegative are the halves dropped by the sign-window
// relation; SpansZero counts walks with min <= 0 <= max (the [x<=0 y>=0]
// extraction, which equals bridges exactly when the reach sets make
// min <= 0 <= max imply 0 reachable).
enum class WalkFamily {
    Walk,
    Bridge,
    Meander,
    Excursion,
    MinPositive,
    MaxNegative,
    SpansZero
};

enum class StateMode { FullSet, TypeCompressed };

// Exact weighted count of length-0..n_max walks in the family. Weights are
// scaled to integers internally, so results are integers when all weights
// are. Full-set mode hashes whole reachable sets (state masks grow with
// n * max-norm bits, so it suits lengths up to a few dozen); type-compressed
// mode keys states by (type, min, max), scales to long walks, and needs an
// automaton (inferred on demand for any step set when `aut` is null; throws
// with the unmatched sets when inference fails).
std::vector<Rat> count_by_dp(const NStepSet& S, std::int64_t n_max,
                             WalkFamily family,
                             StateMode mode = StateMode::FullSet,
                             const TypeAutomaton* aut = nullptr);

// One-dimensional weighted lattice-path DP over the top-path step multiset
// (height-indexed); counts classical meanders, or excursions only.
std::vector<Rat> classical_count(const std::vector<std::pair<std::int64_t, Rat>>& steps,
                                 std::int64_t n_max, bool excursions_only);

// Weighted distribution of the final maximal reachable point over length-n
// excursions (unnormalized).
std::map<std::int64_t, Rat> excursion_final_max_distribution(const NStepSet& S,
                                                             std::int64_t n);

// Weighted distribution of the number of returns to {0} over length-n
// excursions (unnormalized).
std::map<std::int64_t, Rat> excursion_returns_distribution(const NStepSet& S,
                                                           std::int64_t n);

}  // namespace nwalk

#endif
