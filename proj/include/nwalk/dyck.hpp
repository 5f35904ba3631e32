#ifndef NWALK_DYCK_HPP
#define NWALK_DYCK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nwalk/laurent.hpp"
#include "nwalk/rational.hpp"
#include "nwalk/series.hpp"
#include "nwalk/step_set.hpp"

namespace nwalk {

// Weights of the three Dyck N-steps {-1}, {1}, {-1,1}.
struct DyckWeights {
    Rat p_m1, p_p1, p_m1p1;

    Rat q() const { return p_p1 + p_m1p1; }  // weight of max-raising steps
    bool is_probability() const { return p_m1 + p_p1 + p_m1p1 == 1; }
    NStepSet step_set() const { return NStepSet::dyck(p_m1, p_p1, p_m1p1); }
};

struct DriftVector {
    Rat delta_x, delta_y;
};

// Expected per-step change of the minimal and maximal reachable point; in
// probability mode these are 2*p1 - 1 and 1 - 2*p_m1.
DriftVector drift_vector(const DyckWeights& w);

// phi(s) = (min s, max s); Dyck steps map to (-1,-1), (1,1), (-1,1).
std::vector<std::pair<std::int64_t, std::int64_t>> map_to_2d(
    const std::vector<IntSet>& walk);

// Min-max-change polynomial S(x,y) = p_m1/(xy) + p_p1*xy + p_m1p1*y/x.
LaurentPoly minmax_polynomial(const DyckWeights& w);
// Kernel K(x,y) = xy(1 - t S(x,y)) as Laurent-polynomial data: the constant
// part xy and the t-coefficient -xy*S(x,y) (a polynomial in x^2y^2, y^2).
struct DyckKernel {
    LaurentPoly constant_part;
    LaurentPoly t_part;
};
DyckKernel kernel_polynomials(const DyckWeights& w);
// The same kernel evaluated at rational (x,y), as a series in t (degree 1).
RationalSeries kernel_at(const DyckWeights& w, const Rat& x, const Rat& y,
                         std::int64_t order);
// D(x,y;t) = 1/(1 - t S(x,y)).
BivariateSeries dyck_walk_gf(const DyckWeights& w, std::int64_t order);

// Power-series kernel roots: K(1, Y(t)) = 0 and K(X(y,t), y) = 0.
RationalSeries dyck_Y(const DyckWeights& w, std::int64_t order);
RationalSeries dyck_X(const DyckWeights& w, const Rat& y, std::int64_t order);

// Closed-form D+(x,y;t) assembled from the kernel method, evaluated at
// rational (x,y). Requires nondegenerate weights for the specialization in
// use (p_m1 > 0 when a D+(0,0) division appears).
RationalSeries dyck_meander_gf(const DyckWeights& w, const Rat& x, const Rat& y,
                               std::int64_t order);

// (1-6t^2)/(sqrt(1-8t^2)(1-9t^2)); unweighted only.
RationalSeries dyck_bridge_gf_unweighted(std::int64_t order);

enum class DyckClass { Walk, Bridge, Meander, Excursion };

// Table-row leading term for the unweighted model (even-length classes
// return 0 at odd n).
double dyck_leading_term(DyckClass c, std::int64_t n);
// Leading term plus the printed correction.
double dyck_asymptotic(DyckClass c, std::int64_t n);

// Probability that a random Dyck N-walk of even length `len` is an
// N-excursion, by the four drift regimes. Throws std::domain_error outside
// probability mode.
double dyck_excursion_prob_asym(const DyckWeights& w, std::int64_t len);
// Regime label 1..4 (after the p1 <-> p_m1 symmetry reduction).
int dyck_excursion_regime(const DyckWeights& w);

// Discrete limit law of the final maximal point (negative y-drift,
// p_m1p1 != 0): P(max = 2k) for k = 0..k_max. Throws std::domain_error with
// a regime diagnostic outside its case.
std::vector<double> dyck_maxlaw_pmf(const DyckWeights& w, std::int64_t k_max);
// Printed closed form of the discrete-case mean. Note the units: this is
// the mean final maximal ALTITUDE (= 2k), twice the mean of the PMF index.
double dyck_maxlaw_mean(const DyckWeights& w);
// Zero-x-drift moments E = mu n - p_m1 sqrt(pi n), V = p_m1 (2 - p_m1 pi) n,
// for an excursion of length 2n; these are in index units (altitude / 2).
struct MaxlawMoments {
    double mean, variance;
};
MaxlawMoments dyck_maxlaw_case3_moments(const DyckWeights& w, std::int64_t n);

// Limit law of the number of returns to {0} in a random N-excursion.
struct ReturnsPmf {
    int case_id;           // 1..6
    std::string case_name;
    std::vector<double> pmf;  // P(k) for k = 0..k_max
};
ReturnsPmf dyck_returns_pmf(const DyckWeights& w, std::int64_t k_max);

// Numeric D+(0,0;t) = Y(t)/(p_m1 t) at a scalar argument.
double dyck_d00_at(const DyckWeights& w, double t);

}  // namespace nwalk

#endif
