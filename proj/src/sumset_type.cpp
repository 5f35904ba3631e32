#include "nwalk/sumset_type.hpp"

#include <algorithm>
#include <stdexcept>

namespace nwalk {

std::string SumsetType::to_string() const {
    return "(" + std::to_string(g) + "," + std::to_string(k) + "," +
           a.to_string() + "," + b.to_string() + "," + c.to_string() + ")";
}

std::int64_t max_or_minus_one(const IntSet& s) { return s.empty() ? -1 : s.max(); }

bool is_proper(const SumsetType& t) {
    if (t.b.empty()) return t.g == 0 && t.k == 0 && t.a.empty() && t.c.empty();
    if (t.g == 0)
        return t.k == 0 && t.a.empty() && t.c.empty() && t.b.min() == 0;
    if (!t.a.empty() && t.a.min() < 0) return false;
    if (!t.c.empty() && t.c.min() < 0) return false;
    if (t.b.min() != 0 || t.b.max() > t.g - 1) return false;
    return t.k * t.g > max_or_minus_one(t.a) + max_or_minus_one(t.c);
}

IntSet type_instance(const SumsetType& t, std::int64_t j, std::int64_t m) {
    if (j < t.k)
        throw std::invalid_argument("type_instance: index " + std::to_string(j) +
                                    " below k=" + std::to_string(t.k));
    IntSet base = sumset(nfold_sumset(j, IntSet{0, t.g}), t.b);
    return prune_top(prune_bottom(base, t.a), t.c).shifted(m);
}

std::int64_t type_stable_index(const SumsetType& t) {
    if (t.g <= 0 || t.b.empty())
        throw std::logic_error("type_stable_index needs a periodic type");
    std::int64_t j = std::max<std::int64_t>(t.k, 0);
    while (j * t.g + t.b.max() <=
           max_or_minus_one(t.a) + max_or_minus_one(t.c) + 2 * t.g)
        ++j;
    return j;
}

bool type_member(const SumsetType& t, const IntSet& s) {
    if (t.b.empty()) return s.empty();
    if (t.g == 0) {
        IntSet r0 = type_instance(t, t.k, 0);
        if (r0.empty()) return s.empty();
        return equivalent(s, r0);
    }
    // Below stabilization the masks may eat the base extremes and the norm
    // progression is irregular; scan those indices directly.
    std::int64_t jstab = type_stable_index(t);
    for (std::int64_t j = t.k; j <= jstab; ++j) {
        IntSet r = type_instance(t, j, 0);
        if (r.empty() ? s.empty() : equivalent(s, r)) return true;
    }
    if (s.empty()) return false;
    IntSet rs = type_instance(t, jstab, 0);
    std::int64_t diff = s.norm() - rs.norm();
    if (diff <= 0 || diff % t.g != 0) return false;
    return equivalent(s, type_instance(t, jstab + diff / t.g, 0));
}

NormalizedType type_normalize(const SumsetType& t) {
    if (is_proper(t)) return {t, t.k};
    if (t.b.empty()) return {SumsetType{0, 0, {}, {}, {}}, t.k};

    // Shift-invariance lets us drop negative mask entries and anchor b at 0.
    SumsetType u = t;
    u.a = u.a.nonnegative_part();
    u.c = u.c.nonnegative_part();
    u.b = shift_to_zero(u.b);

    if (u.g == 0) {
        IntSet r0 = prune_top(prune_bottom(u.b, u.a), u.c);
        if (r0.empty()) return {SumsetType{0, 0, {}, {}, {}}, t.k};
        return {SumsetType{0, 0, {}, shift_to_zero(r0), {}}, t.k};
    }

    if (u.b.max() < u.g) {
        SumsetType result = u;
        std::int64_t kmin = 0;
        while (kmin * result.g <=
               max_or_minus_one(result.a) + max_or_minus_one(result.c))
            ++kmin;
        result.k = std::max(t.k, kmin);
        return {result, result.k};
    }

    // Fold the pattern into one period and read the boundary masks off a
    // large concrete instance; deviations from the periodic base split into
    // a bottom mask and a top mask. Retry with a larger instance when the
    // masks have not separated yet.
    std::vector<std::int64_t> res;
    for (auto x : u.b) res.push_back(((x % u.g) + u.g) % u.g);
    IntSet bp(std::move(res));
    std::int64_t delta = (u.b.max() + u.g - 1) / u.g;

    std::int64_t bigj = u.k;
    while (bigj * u.g + u.b.max() <=
           2 * (max_or_minus_one(u.a) + max_or_minus_one(u.c) + 2 * u.b.max() +
                3 * u.g))
        ++bigj;

    std::string why;
    for (int attempt = 0; attempt < 6; ++attempt, bigj *= 2) {
        IntSet final_set = type_instance(u, bigj, 0);
        IntSet base_new = sumset(nfold_sumset(bigj + delta, IntSet{0, u.g}), bp);
        std::int64_t top = base_new.max();
        IntSet dropped = base_new.minus(final_set);
        std::vector<std::int64_t> av, cv;
        for (auto x : dropped) {
            if (2 * x <= top)
                av.push_back(x);
            else
                cv.push_back(top - x);
        }
        SumsetType result{u.g, 0, IntSet(std::move(av)), bp, IntSet(std::move(cv))};
        std::int64_t kmin = 0;
        while (kmin * result.g <=
               max_or_minus_one(result.a) + max_or_minus_one(result.c))
            ++kmin;
        // The masks are read off a large instance; small indices may not have
        // stabilized yet (the pattern's parts can still overlap there), so
        // scan for the first index from which four consecutive members agree.
        std::int64_t lo = std::max(t.k, std::max(kmin - delta, std::int64_t{0}));
        for (std::int64_t threshold = lo; threshold <= lo + delta + 6; ++threshold) {
            result.k = threshold + delta;
            if (!is_proper(result)) {
                why = "not proper";
                continue;
            }
            bool match = true;
            for (std::int64_t j = threshold; j < threshold + 4 && match; ++j)
                match = type_instance(u, j, 0) == type_instance(result, j + delta, 0);
            if (match) return {result, threshold};
            why = "family mismatch";
        }
    }
    throw std::logic_error("type_normalize failed (" + why + ") for " + t.to_string());
}

}  // namespace nwalk
