#ifndef NWALK_SUMSET_TYPE_HPP
#define NWALK_SUMSET_TYPE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "nwalk/int_set.hpp"

namespace nwalk {

// An infinite family of integer sets
//
//     instance(j, m) = j x {0,g} + b, bottom-pruned by a, top-pruned by c,
//                      shifted by m,          for j >= k, m in Z.
//
// Every member is determined by its minimum and maximum, which is what makes
// (type id, min, max) a sufficient DP state for walk counting.
struct SumsetType {
    std::int64_t g = 0;  // period
    std::int64_t k = 0;  // smallest admissible repetition index
    IntSet a;            // bottom-pruning mask
    IntSet b;            // pattern
    IntSet c;            // top-pruning mask

    bool operator==(const SumsetType& o) const = default;

    std::string to_string() const;
};

// max(empty) counts as -1 in the properness inequality k*g > max(a)+max(c).
std::int64_t max_or_minus_one(const IntSet& s);

// Proper means: g=0 implies k=0, a=c empty, min(b)=0 (when b is nonempty);
// g>0 implies a,c nonnegative, min(b)=0, b inside [0,g-1], and
// k*g > max(a)+max(c). The family {empty} is represented by b = {} and is
// proper by convention.
bool is_proper(const SumsetType& t);

// Throws std::invalid_argument when j < t.k.
IntSet type_instance(const SumsetType& t, std::int64_t j, std::int64_t m);

// Smallest index from which the pruning masks are clear of the base
// extremes, so min/max offsets and norm steps are uniform. Requires g > 0
// and a nonempty pattern.
std::int64_t type_stable_index(const SumsetType& t);

// Decides membership by reconstructing (j, m) from min and max (scanning the
// few indices below stabilization directly).
bool type_member(const SumsetType& t, const IntSet& s);

struct NormalizedType {
    SumsetType proper;
    // Families coincide from this index on: for every j >= threshold (index
    // in the ORIGINAL type), instance(original, j, m) lies in `proper`, and
    // every instance of `proper` with index >= proper.k arises that way.
    std::int64_t threshold = 0;
};

// Rewrites a type as a proper one covering the same family from `threshold`
// up. Already-proper types are returned unchanged.
NormalizedType type_normalize(const SumsetType& t);

}  // namespace nwalk

#endif
