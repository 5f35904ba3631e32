#ifndef NWALK_INT_SET_HPP
#define NWALK_INT_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nwalk {

// A finite set of integers kept as a strictly increasing vector.
// Models one N-step as well as one set of reachable points.
class IntSet {
public:
    IntSet() = default;
    IntSet(std::initializer_list<std::int64_t> xs);
    explicit IntSet(std::vector<std::int64_t> xs);  // sorts and dedupes

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    std::int64_t min() const;  // requires nonempty
    std::int64_t max() const;  // requires nonempty
    bool contains(std::int64_t x) const;

    const std::vector<std::int64_t>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const IntSet& o) const = default;
    bool operator<(const IntSet& o) const { return elems_ < o.elems_; }

    // 0 for the empty set, max - min otherwise.
    std::int64_t norm() const;

    IntSet shifted(std::int64_t m) const;
    // Set difference.
    IntSet minus(const IntSet& o) const;
    // Keeps the elements >= 0 (meander floor).
    IntSet nonnegative_part() const;

    // Text form "{-1,1}"; the empty set prints as "{}".
    std::string to_string() const;
    static IntSet parse(const std::string& text);

private:
    std::vector<std::int64_t> elems_;
};

// Minkowski sum {a+b | a in s, b in t}. The empty set is absorbing, {0} is
// the identity.
IntSet sumset(const IntSet& s, const IntSet& t);

// n-fold sumset; 0-fold gives {0}.
IntSet nfold_sumset(std::int64_t n, const IntSet& s);

// s \ ({min(s)} + t); empty s stays empty.
IntSet prune_bottom(const IntSet& s, const IntSet& t);

// s \ ({max(s)} - t); empty s stays empty.
IntSet prune_top(const IntSet& s, const IntSet& t);

// {min+max-x | x in s}; an involution. The empty set maps to itself.
IntSet conjugate(const IntSet& s);

// True iff s = t + {m} for some integer m. Two empty sets are equivalent.
bool equivalent(const IntSet& s, const IntSet& t);

// Normalized shift-class representative (min moved to 0); empty set unchanged.
IntSet shift_to_zero(const IntSet& s);

// Secondary packed form used as a hash key by the walk engine: the minimum
// plus an offset bitmask. Must agree with IntSet equality.
struct PackedSet {
    std::int64_t min = 0;
    std::vector<std::uint64_t> bits;  // bit i set <=> min + i in the set

    auto operator<=>(const PackedSet& o) const = default;
};

PackedSet pack_set(const IntSet& s);
IntSet unpack_set(const PackedSet& p);

struct PackedSetHash {
    std::size_t operator()(const PackedSet& p) const;
};

// Largest integer not representable as a nonnegative combination of s,
// or -1 if every nonnegative integer is representable. Requires positive
// elements with gcd 1; throws std::invalid_argument otherwise.
std::int64_t frobenius_number(const IntSet& s);

}  // namespace nwalk

#endif
