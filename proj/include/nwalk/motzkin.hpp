#ifndef NWALK_MOTZKIN_HPP
#define NWALK_MOTZKIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nwalk/laurent.hpp"
#include "nwalk/series.hpp"
#include "nwalk/walk.hpp"

namespace nwalk {

// Reachable-point shape over the Motzkin step set: TypeI = integer interval
// of norm >= 1, TypeII = step-2 progression (incl. singletons).
enum class MotzkinType { I, II };

// Shape test on a concrete set; throws if the set is neither.
MotzkinType motzkin_shape(const IntSet& reach);

// Type after reading the walk, by the step-subset rule: II iff every step
// is one of {-1},{0},{1},{-1,1}.
MotzkinType motzkin_walk_type(const Walk& walk);
// Meander variant, including the {0,1} --{-1}--> {0} boundary return to II.
// The walk must stay a meander (throws otherwise).
MotzkinType motzkin_meander_type(const Walk& walk);

// The two rational walk generating functions split by type, and their sum.
struct MotzkinWalkSeries {
    BivariateSeries type1, type2;
    RationalSeries total_at_11;  // M(1,1;t) = 7^n
};
MotzkinWalkSeries motzkin_walk_series(std::int64_t order);

// Fig.-matrices entries (unweighted).
std::vector<std::vector<LaurentPoly>> motzkin_matrix_A();
std::vector<std::vector<LaurentPoly>> motzkin_matrix_B();
std::vector<std::vector<LaurentPoly>> motzkin_matrix_C();

// Vector (M+_II, y^{-1} M+_I) iterated from the functional equation with the
// A, B, C matrices; meander_total = M+_II + y * (second component).
struct MotzkinMeanderSeries {
    BivariateSeries comp2;       // M+_II
    BivariateSeries comp1_over_y;  // y^{-1} M+_I
    BivariateSeries meander_total;
};
MotzkinMeanderSeries motzkin_meander_vector(std::int64_t order);

// Kernel roots of 1 - t*A00 and 1 - t*A11 (power series in t, rational y),
// and the closed-form Y roots.
RationalSeries motzkin_X1(const Rat& y, std::int64_t order);
RationalSeries motzkin_X2(const Rat& y, std::int64_t order);
RationalSeries motzkin_Y1(std::int64_t order);
RationalSeries motzkin_Y2(std::int64_t order);

// M+(1,1;t) = (10t - 1 + sqrt((1+2t)(1-6t))) / (8t(1-7t)).
RationalSeries motzkin_meander_closed_form(std::int64_t order);

// The printed degree-4 polynomial annihilating E = M+(0,1;t); coefficients
// of E^0..E^4 as exact polynomials in t.
std::vector<RationalSeries> motzkin_excursion_quartic(std::int64_t order);

struct ClosedFormReport {
    bool meander_ok = false;
    std::int64_t meander_first_mismatch = -1;  // order, or -1
    bool quartic_ok = false;
    std::int64_t quartic_first_nonzero = -1;
    std::string to_string() const;
};
// (i) closed form vs meander DP to `order`; (ii) quartic residual at the
// excursion DP series, zero mod t^15.
ClosedFormReport motzkin_closed_form_checks(std::int64_t order);

enum class MotzkinClass { Walk, Bridge, Meander, Excursion };

// Positive real root of 1024 g^4 - 8019 g^2 + 2916 in (0,1).
double motzkin_gamma();
double motzkin_leading_term(MotzkinClass c, std::int64_t n);
double motzkin_asymptotic(MotzkinClass c, std::int64_t n);

}  // namespace nwalk

#endif
