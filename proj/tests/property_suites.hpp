#ifndef NWALK_TESTS_PROPERTY_SUITES_HPP
#define NWALK_TESTS_PROPERTY_SUITES_HPP

// Randomized property suites shared by the standalone binary and the
// acceptance criterion. Each suite runs at least 200 cases and prints one
// line; run_property_suites returns the number of failed suites.

#include <cstdio>
#include <iostream>
#include <string>

#include "nwalk/count.hpp"
#include "nwalk/dyck.hpp"
#include "nwalk/int_set.hpp"
#include "nwalk/laurent.hpp"
#include "nwalk/series.hpp"
#include "nwalk/sumset_type.hpp"
#include "oracles.hpp"

namespace nwalk::testing {

namespace property_detail {
namespace {

int g_failures = 0;

void report(const std::string& name, int cases, int failed) {
    std::printf("%-38s %5d cases  %s\n", name.c_str(), cases,
                failed ? "FAIL" : "ok");
    if (failed) ++g_failures;
}

#define PROP_CHECK(cond)                                                     \
    do {                                                                     \
        if (!(cond)) {                                                       \
            ++failed;                                                        \
            if (failed < 4)                                                  \
                std::cerr << "  property failed at " << __FILE__ << ":"      \
                          << __LINE__ << " (case " << iter << ")\n";         \
        }                                                                    \
    } while (0)

void sumset_monoid_laws() {
    Gen gen(101);
    int failed = 0, cases = 0;
    for (int iter = 0; iter < 250; ++iter, ++cases) {
        IntSet a = gen.int_set(-10, 10, 6);
        IntSet b = gen.int_set(-10, 10, 6);
        IntSet c = gen.int_set(-10, 10, 6);
        PROP_CHECK(sumset(a, b) == sumset(b, a));
        PROP_CHECK(sumset(sumset(a, b), c) == sumset(a, sumset(b, c)));
        PROP_CHECK(sumset(a, IntSet{0}) == a);
        PROP_CHECK(sumset(a, IntSet{}) == IntSet{});
        if (!a.empty() && !b.empty()) {
            PROP_CHECK(sumset(a, b).size() <= a.size() * b.size());
            PROP_CHECK(sumset(a, b).norm() == a.norm() + b.norm());
        }
    }
    report("sumset monoid laws", cases, failed);
}

void pruning_conjugation_duality() {
    // conjugate(s) bottom-pruned by t is shift-equivalent to the conjugate of
    // s top-pruned by t; exhaustive over sets within [0,8]
    int failed = 0, cases = 0, iter = 0;
    for (unsigned smask = 1; smask < 512; ++smask) {
        std::vector<std::int64_t> sv;
        for (int i = 0; i < 9; ++i)
            if (smask & (1u << i)) sv.push_back(i);
        IntSet s(std::move(sv));
        for (unsigned tmask = 0; tmask < 512; ++tmask) {
            std::vector<std::int64_t> tv;
            for (int i = 0; i < 9; ++i)
                if (tmask & (1u << i)) tv.push_back(i);
            IntSet t(std::move(tv));
            ++cases;
            ++iter;
            PROP_CHECK(equivalent(prune_bottom(conjugate(s), t),
                                  conjugate(prune_top(s, t))));
        }
    }
    report("pruning/conjugation duality", cases, failed);
}

void type_normalization_equivalence() {
    Gen gen(555);
    int failed = 0, cases = 0;
    for (int iter = 0; iter < 220; ++iter, ++cases) {
        SumsetType t;
        t.g = gen.range(0, 4);
        t.k = gen.range(0, 3);
        t.a = gen.int_set(0, 4, 2);
        t.b = gen.int_set(0, 9, 4, false);
        t.c = gen.int_set(0, 4, 2);
        NormalizedType n = type_normalize(t);
        PROP_CHECK(is_proper(n.proper));
        for (std::int64_t j = n.threshold; j < n.threshold + 3; ++j)
            for (std::int64_t m : {-2, 0, 3})
                PROP_CHECK(type_member(n.proper, type_instance(t, j, m)));
        // and instances of the proper type come from the original family
        if (!n.proper.b.empty()) {
            for (std::int64_t j = n.proper.k; j < n.proper.k + 3; ++j)
                PROP_CHECK(type_member(n.proper, type_instance(n.proper, j, 1)));
        }
    }
    report("type normalization equivalence", cases, failed);
}

void top_path_meander_equality() {
    Gen gen(909);
    int failed = 0, cases = 0;
    for (int iter = 0; iter < 200; ++iter, ++cases) {
        std::vector<std::pair<IntSet, Rat>> steps;
        std::int64_t nsteps = gen.range(1, 4);
        for (std::int64_t i = 0; i < nsteps; ++i)
            steps.emplace_back(gen.int_set(-3, 3, 3, false), gen.small_rat() + Rat(1, 7));
        NStepSet S{steps};
        std::int64_t n = gen.range(1, 7);
        auto dp_meander = count_by_dp(S, n, WalkFamily::Meander);
        auto classical = classical_count(S.top_step_weights(), n, false);
        PROP_CHECK(dp_meander == classical);
        auto classical_exc = classical_count(S.top_step_weights(), n, true);
        auto dist = excursion_final_max_distribution(S, n);
        Rat ending_zero = dist.count(0) ? dist[0] : Rat(0);
        PROP_CHECK(ending_zero == classical_exc[static_cast<std::size_t>(n)]);
    }
    report("top-path meander equality", cases, failed);
}

void excursion_weight_symmetry() {
    Gen gen(333);
    int failed = 0, cases = 0;
    for (int iter = 0; iter < 200; ++iter, ++cases) {
        // symmetric N-step set: pair s with -s, plus symmetric singles
        std::vector<std::pair<IntSet, Rat>> fwd, swapped;
        std::int64_t pairs = gen.range(1, 3);
        for (std::int64_t i = 0; i < pairs; ++i) {
            IntSet s = gen.int_set(-3, 3, 3, false);
            IntSet neg;
            {
                std::vector<std::int64_t> xs;
                for (auto x : s) xs.push_back(-x);
                neg = IntSet(std::move(xs));
            }
            Rat w1 = gen.small_rat() + Rat(1, 5);
            Rat w2 = gen.small_rat() + Rat(1, 5);
            fwd.emplace_back(s, w1);
            fwd.emplace_back(neg, w2);
            swapped.emplace_back(s, w2);
            swapped.emplace_back(neg, w1);
        }
        NStepSet A{fwd}, B{swapped};
        std::int64_t n = gen.range(1, 6);
        PROP_CHECK(count_by_dp(A, n, WalkFamily::Excursion) ==
                   count_by_dp(B, n, WalkFamily::Excursion));
    }
    report("p_s <-> p_{-s} excursion symmetry", cases, failed);
}

void parity_vanishing() {
    Gen gen(606);
    int failed = 0, cases = 0;
    for (int iter = 0; iter < 200; ++iter, ++cases) {
        // all step elements odd: reach sets at odd length avoid 0
        std::vector<std::pair<IntSet, Rat>> steps;
        std::int64_t nsteps = gen.range(1, 3);
        for (std::int64_t i = 0; i < nsteps; ++i) {
            std::vector<std::int64_t> xs;
            std::int64_t sz = gen.range(1, 3);
            for (std::int64_t j = 0; j < sz; ++j)
                xs.push_back(2 * gen.range(-2, 2) + 1);
            steps.emplace_back(IntSet(std::move(xs)), gen.small_rat() + Rat(1, 9));
        }
        NStepSet S{steps};
        auto b = count_by_dp(S, 7, WalkFamily::Bridge);
        auto e = count_by_dp(S, 7, WalkFamily::Excursion);
        for (int n = 1; n <= 7; n += 2) {
            PROP_CHECK(b[static_cast<std::size_t>(n)] == 0);
            PROP_CHECK(e[static_cast<std::size_t>(n)] == 0);
        }
    }
    report("parity vanishing", cases, failed);
}

void extraction_selector_laws() {
    Gen gen(404);
    int failed = 0, cases = 0;
    for (int iter = 0; iter < 200; ++iter, ++cases) {
        LaurentPoly p;
        std::int64_t terms = gen.range(1, 8);
        for (std::int64_t i = 0; i < terms; ++i)
            p.add_term(gen.small_rat() - Rat(1, 2), gen.range(-4, 4), gen.range(-4, 4));
        PROP_CHECK(extract_x_positive(p) + extract_x_nonpositive(p) == p);
        PROP_CHECK(extract_y_negative(p) + extract_y_nonnegative(p) == p);
        PROP_CHECK(extract_x_positive(extract_x_positive(p)) == extract_x_positive(p));
        // residue filter over g=2 equals the symmetrized form (f(x)+f(-x))/2
        LaurentPoly mirrored;
        for (auto& [e, c] : p.terms())
            mirrored.add_term(e.first % 2 == 0 ? c : -c, e.first, e.second);
        LaurentPoly sym = (p + mirrored).scaled(Rat(1, 2));
        PROP_CHECK(extract_x_residue(p, 0, 2) == sym);
    }
    report("residue filter = root-of-unity sum", cases, failed);
}

void dyck_meander_corners() {
    // random rational weight triples: the closed forms match the DP at every
    // corner of the unit square, to order 20
    Gen gen(1123);
    int failed = 0, cases = 0;
    for (int iter = 0; iter < 10; ++iter, ++cases) {
        DyckWeights w{gen.small_rat() + Rat(1, 7), gen.small_rat() + Rat(1, 7),
                      gen.small_rat() + Rat(1, 7)};
        NStepSet S = w.step_set();
        auto meanders = count_by_dp(S, 20, WalkFamily::Meander);
        auto excursions = count_by_dp(S, 20, WalkFamily::Excursion);
        RationalSeries gf11 = dyck_meander_gf(w, 1, 1, 21);
        RationalSeries gf01 = dyck_meander_gf(w, 0, 1, 21);
        RationalSeries gf00 = dyck_meander_gf(w, 0, 0, 21);
        PROP_CHECK(dyck_meander_gf(w, 1, 0, 21) == gf00);
        for (std::int64_t n = 0; n <= 20; ++n) {
            PROP_CHECK(gf11.coeff(n) == meanders[static_cast<std::size_t>(n)]);
            PROP_CHECK(gf01.coeff(n) == excursions[static_cast<std::size_t>(n)]);
            auto dist = excursion_final_max_distribution(S, n);
            Rat zero_ending = dist.count(0) ? dist[0] : Rat(0);
            PROP_CHECK(gf00.coeff(n) == zero_ending);
        }
    }
    report("dyck meander gf on the unit square", cases, failed);
}

void series_roundtrips() {
    Gen gen(777);
    int failed = 0, cases = 0;
    for (int iter = 0; iter < 200; ++iter, ++cases) {
        std::int64_t o = 12;
        std::vector<Rat> ac, bc;
        for (int i = 0; i < 6; ++i) {
            ac.push_back(gen.small_rat() - Rat(1, 2));
            bc.push_back(gen.small_rat() - Rat(1, 2));
        }
        if (bc[0] == 0) bc[0] = 1;
        RationalSeries a = RationalSeries(gen.range(-2, 2), std::move(ac), o);
        RationalSeries b = RationalSeries(gen.range(-2, 2), std::move(bc), o);
        RationalSeries q = (a * b) / b;
        PROP_CHECK(q == a.truncated(q.trunc()));
        // sqrt of an even-valuation square
        RationalSeries sq = (a * a).truncated(o);
        if (!sq.is_zero() && sq.valuation() % 2 == 0) {
            RationalSeries r = series_sqrt(sq);
            PROP_CHECK((r * r) == sq.truncated((r * r).trunc()));
        }
    }
    report("series (a*b)/b and sqrt roundtrips", cases, failed);
}

}  // namespace
}  // namespace property_detail

inline int run_property_suites() {
    using namespace property_detail;
    g_failures = 0;
    sumset_monoid_laws();
    pruning_conjugation_duality();
    type_normalization_equivalence();
    top_path_meander_equality();
    excursion_weight_symmetry();
    parity_vanishing();
    extraction_selector_laws();
    dyck_meander_corners();
    series_roundtrips();
    return g_failures;
}

}  // namespace nwalk::testing

#endif
