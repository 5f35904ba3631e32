#include "nwalk/dyck.hpp"

#include <cmath>
#include <stdexcept>

namespace nwalk {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_probability(const DyckWeights& w, const char* who) {
    if (!w.is_probability())
        throw std::domain_error(std::string(who) + ": weights must sum to 1");
    if (w.p_m1 < 0 || w.p_p1 < 0 || w.p_m1p1 < 0)
        throw std::domain_error(std::string(who) + ": negative weight");
}

double yd(const DyckWeights& w, double t) {
    double q = to_double(w.q());
    double p = to_double(w.p_m1);
    if (q == 0.0) return p * t;
    return (1.0 - std::sqrt(1.0 - 4.0 * p * q * t * t)) / (2.0 * q * t);
}

double xd(const DyckWeights& w, double y, double t) {
    double p1 = to_double(w.p_p1);
    double inner = to_double(w.p_m1) + to_double(w.p_m1p1) * y * y;
    if (p1 == 0.0) return t * inner / y;
    return (1.0 - std::sqrt(1.0 - 4.0 * p1 * inner * t * t)) / (2.0 * p1 * y * t);
}

// ---- double power series helpers (used by the limit-law evaluators) ----

using DSeries = std::vector<double>;

DSeries dmul(const DSeries& a, const DSeries& b) {
    DSeries r(std::min(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// 1 / b with b[0] != 0
DSeries dinv(const DSeries& b) {
    DSeries r(b.size(), 0.0);
    r[0] = 1.0 / b[0];
    for (std::size_t i = 1; i < b.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < i; ++j)
            if (i - j < b.size()) acc += r[j] * b[i - j];
        r[i] = -acc / b[0];
    }
    return r;
}

// (1 - a z)^(1/2) to n terms
DSeries dsqrt_one_minus(double a, std::size_t n) {
    DSeries r(n, 0.0);
    r[0] = 1.0;
    double c = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        c *= a * (static_cast<double>(i) - 1.5) / static_cast<double>(i);
        r[i] = c;
    }
    return r;
}

}  // namespace

DriftVector drift_vector(const DyckWeights& w) {
    return {w.p_p1 - w.p_m1p1 - w.p_m1, w.p_p1 + w.p_m1p1 - w.p_m1};
}

std::vector<std::pair<std::int64_t, std::int64_t>> map_to_2d(
    const std::vector<IntSet>& walk) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(walk.size());
    for (auto& s : walk) out.emplace_back(s.min(), s.max());
    return out;
}

LaurentPoly minmax_polynomial(const DyckWeights& w) {
    LaurentPoly s;
    s.add_term(w.p_m1, -1, -1);
    s.add_term(w.p_p1, 1, 1);
    s.add_term(w.p_m1p1, -1, 1);
    return s;
}

DyckKernel kernel_polynomials(const DyckWeights& w) {
    DyckKernel k;
    k.constant_part = LaurentPoly::monomial(1, 1, 1);
    k.t_part = LaurentPoly::monomial(-1, 1, 1) * minmax_polynomial(w);
    return k;
}

RationalSeries kernel_at(const DyckWeights& w, const Rat& x, const Rat& y,
                         std::int64_t order) {
    // xy - t (p_m1 + p_p1 x^2 y^2 + p_m1p1 y^2)
    DyckKernel k = kernel_polynomials(w);
    return RationalSeries::poly({k.constant_part.eval(x, y), k.t_part.eval(x, y)},
                                order);
}

BivariateSeries dyck_walk_gf(const DyckWeights& w, std::int64_t order) {
    return BivariateSeries::geometric(minmax_polynomial(w), order);
}

RationalSeries dyck_Y(const DyckWeights& w, std::int64_t order) {
    Rat q = w.q();
    if (q == 0) return RationalSeries::monomial(w.p_m1, 1, order);
    RationalSeries inner =
        RationalSeries::poly({1, 0, -4 * w.p_m1 * q}, order + 1);
    RationalSeries num = RationalSeries::one(order + 1) - series_sqrt(inner);
    return num / RationalSeries::monomial(2 * q, 1, order + 1);
}

RationalSeries dyck_X(const DyckWeights& w, const Rat& y, std::int64_t order) {
    if (y == 0) throw std::domain_error("dyck_X needs y != 0");
    Rat inner = w.p_m1 + w.p_m1p1 * y * y;
    if (w.p_p1 == 0)
        return RationalSeries::monomial(inner / y, 1, order);
    RationalSeries arg =
        RationalSeries::poly({1, 0, -4 * w.p_p1 * inner}, order + 1);
    RationalSeries num = RationalSeries::one(order + 1) - series_sqrt(arg);
    return num / RationalSeries::monomial(2 * w.p_p1 * y, 1, order + 1);
}

namespace {

// D+(0,0;t) = Y(t)/(p_m1 t); 1 when p_m1 = 0 (the reach never returns to {0}).
RationalSeries dyck_d00(const DyckWeights& w, std::int64_t order) {
    if (w.p_m1 == 0) return RationalSeries::one(order);
    return dyck_Y(w, order + 1) / RationalSeries::monomial(w.p_m1, 1, order + 1);
}

// D+(0,y;t) = X (y - X Y) / (t (1 - X^2)(p_m1 + p_m1p1 y^2)), from the
// kernel substitution x = X(y,t) in the functional equation.
RationalSeries dyck_d0y(const DyckWeights& w, const Rat& y, std::int64_t order) {
    Rat mass = w.p_m1 + w.p_m1p1 * y * y;
    if (mass == 0) return RationalSeries::one(order);
    std::int64_t o = order + 2;
    RationalSeries X = dyck_X(w, y, o);
    RationalSeries Y = dyck_Y(w, o);
    RationalSeries num =
        X * (RationalSeries::monomial(y, 0, o) - X * Y);
    RationalSeries den =
        RationalSeries::monomial(mass, 1, o) *
        (RationalSeries::one(o) - X * X);
    return (num / den).truncated(order);
}

}  // namespace

RationalSeries dyck_meander_gf(const DyckWeights& w, const Rat& x, const Rat& y,
                               std::int64_t order) {
    if (y == 0) return dyck_d00(w, order);  // D+(x,0) = D+(0,0)
    if (x == 0) return dyck_d0y(w, y, order);
    std::int64_t o = order + 2;
    // K(x,y) D+ = xy + t (x^2-1)(p_m1 + p_m1p1 y^2) D+(0,y) - t p_m1 x^2 D+(0,0)
    RationalSeries lhs = RationalSeries::monomial(x * y, 0, o);
    Rat mass = w.p_m1 + w.p_m1p1 * y * y;
    if (x * x != 1)
        lhs = lhs + RationalSeries::monomial((x * x - 1) * mass, 1, o) *
                        dyck_d0y(w, y, o);
    if (w.p_m1 != 0)
        lhs = lhs - RationalSeries::monomial(w.p_m1 * x * x, 1, o) *
                        dyck_d00(w, o);
    return (lhs / kernel_at(w, x, y, o)).truncated(order);
}

RationalSeries dyck_bridge_gf_unweighted(std::int64_t order) {
    RationalSeries num = RationalSeries::poly({1, 0, -6}, order);
    RationalSeries root =
        series_sqrt(RationalSeries::poly({1, 0, -8}, order));
    RationalSeries den = root * RationalSeries::poly({1, 0, -9}, order);
    return num / den;
}

double dyck_leading_term(DyckClass c, std::int64_t n) {
    double pw = std::pow(3.0, static_cast<double>(n));
    bool even = n % 2 == 0;
    switch (c) {
        case DyckClass::Walk: return pw;
        case DyckClass::Bridge: return even ? pw : 0.0;
        case DyckClass::Meander: return pw / 2.0;
        case DyckClass::Excursion: return even ? pw / 4.0 : 0.0;
    }
    return 0.0;
}

double dyck_asymptotic(DyckClass c, std::int64_t n) {
    double nn = static_cast<double>(n);
    double grow = std::pow(std::sqrt(8.0), nn);
    bool even = n % 2 == 0;
    switch (c) {
        case DyckClass::Walk:
            return std::pow(3.0, nn);
        case DyckClass::Bridge:
            if (!even) return 0.0;
            return std::pow(3.0, nn) - 2.0 * std::sqrt(2.0 / kPi) * grow / std::sqrt(nn);
        case DyckClass::Meander: {
            double corr = even ? 6.0 * std::sqrt(2.0) : 8.0;
            return std::pow(3.0, nn) / 2.0 + corr * grow / std::sqrt(kPi * nn * nn * nn);
        }
        case DyckClass::Excursion:
            // 4*sqrt(2), pinned by extrapolating exact counts to n=200.
            if (!even) return 0.0;
            return std::pow(3.0, nn) / 4.0 +
                   4.0 * std::sqrt(2.0) * grow / std::sqrt(kPi * nn * nn * nn);
    }
    return 0.0;
}

int dyck_excursion_regime(const DyckWeights& w) {
    require_probability(w, "dyck_excursion_regime");
    Rat a = w.p_p1, b = w.p_m1;  // roles interchangeable
    if (a > b) std::swap(a, b);
    Rat half(1, 2);
    if (b < half) return 1;
    if (b == half) return a == half ? 3 : 2;
    return 4;
}

double dyck_excursion_prob_asym(const DyckWeights& w, std::int64_t len) {
    require_probability(w, "dyck_excursion_prob_asym");
    if (len % 2 != 0) return 0.0;
    double n = static_cast<double>(len / 2);
    Rat a = w.p_p1, b = w.p_m1;
    if (a > b) std::swap(a, b);
    double p1 = to_double(a), pm = to_double(b);
    switch (dyck_excursion_regime(w)) {
        case 1:
            return (1 - 2 * p1) * (1 - 2 * pm) / ((1 - p1) * (1 - pm));
        case 2:
            return (1 - 2 * p1) / ((1 - p1) * std::sqrt(kPi * n));
        case 3:
            return 1.0 / std::sqrt(kPi * n * n * n);
        default: {
            if (a + b > 1)
                throw std::domain_error("excursion asymptotics: p_m1 + p_p1 > 1");
            double rho = 4 * pm * (1 - pm);
            double gamma;
            if (a + b == 1) {
                gamma = 1.0 / std::sqrt(kPi);
            } else {
                double pp = to_double(Rat(1) - a - b);  // p_m1p1 after the swap
                gamma = 2 * pm / std::sqrt(kPi) *
                        (std::sqrt(pp * pm * (1 - pm) * (pm - p1)) -
                         pm * (1 - pm) + (1 - p1) / 2) /
                        ((1 - p1) * (2 * pm - 1) * (2 * pm - 1));
            }
            return gamma * std::pow(rho, n) / std::sqrt(n * n * n);
        }
    }
}

std::vector<double> dyck_maxlaw_pmf(const DyckWeights& w, std::int64_t k_max) {
    require_probability(w, "dyck_maxlaw_pmf");
    DriftVector d = drift_vector(w);
    if (!(d.delta_y < 0))
        throw std::domain_error(
            "dyck_maxlaw_pmf: discrete law needs negative y-drift (p_m1 > 1/2); "
            "other regimes are Rayleigh/normal/convolution");
    if (w.p_m1p1 == 0)
        throw std::domain_error("dyck_maxlaw_pmf: needs p_m1p1 != 0");
    double p = to_double(w.p_m1), p1 = to_double(w.p_p1), pp = to_double(w.p_m1p1);
    double r1 = 1.0 / std::sqrt(4 * p * (1 - p));
    std::size_t n = static_cast<std::size_t>(k_max + 1);

    // w(z) = 1/X(sqrt(z), r1)^2 as a power series in z = y^2
    DSeries wz;
    if (p1 == 0.0) {
        // X = r1 (p + pp z)/y, so 1/X^2 = z / (r1^2 (p + pp z)^2)
        DSeries den(n, 0.0);
        den[0] = r1 * r1 * p * p;
        if (n > 1) den[1] = r1 * r1 * 2 * p * pp;
        if (n > 2) den[2] = r1 * r1 * pp * pp;
        DSeries inv = dinv(den);
        wz.assign(n, 0.0);
        for (std::size_t i = 1; i < n; ++i) wz[i] = inv[i - 1];
    } else {
        double u0 = 1 - 4 * p1 * r1 * r1 * p;
        double u1 = 4 * p1 * r1 * r1 * pp;
        DSeries su = dsqrt_one_minus(u1 / u0, n);
        double s0 = std::sqrt(u0);
        for (auto& c : su) c *= s0;
        DSeries one_minus(n, 0.0);
        one_minus[0] = 1.0;
        for (std::size_t i = 0; i < n; ++i) one_minus[i] -= su[i];
        DSeries denom = dmul(one_minus, one_minus);
        DSeries inv = dinv(denom);
        wz.assign(n, 0.0);
        double c = 4 * p1 * p1 * r1 * r1;
        for (std::size_t i = 1; i < n; ++i) wz[i] = c * inv[i - 1];
    }

    DSeries one_minus_w(n, 0.0);
    one_minus_w[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) one_minus_w[i] -= wz[i];
    DSeries v = dinv(one_minus_w);
    DSeries mass(n, 0.0);
    mass[0] = p;
    if (n > 1) mass[1] = pp;
    DSeries core = dmul(v, dinv(mass));

    double x1 = xd(w, 1.0, r1);
    double scale = (x1 * x1 - 1.0) / (x1 * x1) * (p + pp);
    std::vector<double> pmf(n);
    for (std::size_t i = 0; i < n; ++i) pmf[i] = scale * core[i];
    return pmf;
}

double dyck_maxlaw_mean(const DyckWeights& w) {
    require_probability(w, "dyck_maxlaw_mean");
    double p = to_double(w.p_m1), p1 = to_double(w.p_p1), pp = to_double(w.p_m1p1);
    return 2 * (1 - p) / (-1 + 2 * p) +
           2 * (2 * p - p1) / ((-1 + 2 * p) * (1 - p1)) *
               std::sqrt(p * pp * (1 - p) / (p - p1));
}

MaxlawMoments dyck_maxlaw_case3_moments(const DyckWeights& w, std::int64_t n) {
    require_probability(w, "dyck_maxlaw_case3_moments");
    DriftVector d = drift_vector(w);
    if (d.delta_x != 0 || d.delta_y == 0)
        throw std::domain_error(
            "dyck_maxlaw_case3_moments: needs zero x-drift and nonzero y-drift");
    double p = to_double(w.p_m1);
    double mu = 1 - 2 * p;
    double nn = static_cast<double>(n);
    return {mu * nn - p * std::sqrt(kPi * nn), p * (2 - p * kPi) * nn};
}

double dyck_d00_at(const DyckWeights& w, double t) {
    double p = to_double(w.p_m1);
    if (p == 0.0) return 1.0;
    return yd(w, t) / (p * t);
}

ReturnsPmf dyck_returns_pmf(const DyckWeights& w, std::int64_t k_max) {
    require_probability(w, "dyck_returns_pmf");
    if (w.p_m1 == 0 || w.p_m1 == 1)
        throw std::domain_error("dyck_returns_pmf: degenerate weights");
    std::size_t n = static_cast<std::size_t>(k_max + 1);
    ReturnsPmf out;
    out.pmf.assign(n, 0.0);
    Rat half(1, 2);
    double pm = to_double(w.p_m1), p1 = to_double(w.p_p1);

    auto geometric = [&](double stay) {
        double s = 1.0 - stay;
        for (std::size_t k = 0; k < n; ++k)
            out.pmf[k] = s * std::pow(stay, static_cast<double>(k));
    };

    if (w.p_p1 + w.p_m1 == 1) {
        out.case_id = 4;
        out.case_name = "negative binomial (classical boundary)";
        for (std::size_t k = 0; k < n; ++k)
            out.pmf[k] = static_cast<double>(k) /
                         std::pow(2.0, static_cast<double>(k + 1));
    } else if (w.p_m1 == half) {
        out.case_id = 3;
        out.case_name = "geometric(1/2)";
        for (std::size_t k = 0; k < n; ++k)
            out.pmf[k] = std::pow(2.0, -static_cast<double>(k + 1));
    } else if (w.p_p1 == half) {
        out.case_id = 2;
        out.case_name = "geometric(p_m1)";
        geometric(pm);
    } else if (w.p_m1 < half && w.p_p1 < half) {
        out.case_id = 1;
        out.case_name = "geometric via D+(0,0;1)";
        geometric(1.0 - 1.0 / dyck_d00_at(w, 1.0));
    } else if (w.p_p1 > half) {
        out.case_id = 5;
        out.case_name = "geometric via D+(0,0) at rho2";
        double rho2 = 1.0 / (4 * p1 * (1 - p1));
        geometric(1.0 - 1.0 / dyck_d00_at(w, std::sqrt(rho2)));
    } else {
        // p_m1 > 1/2: the square-root singularity of Y dominates both the
        // excursion series and D+(0,0); the law mixes a geometric(1/2) with
        // a size-biased component.
        out.case_id = 6;
        out.case_name = "mixed geometric(1/2)";
        double rho1 = 1.0 / (4 * pm * (1 - pm));
        double ts = std::sqrt(rho1);
        double q = 1 - pm;
        double y0 = 1.0 / (2 * q * ts);
        double xs = xd(w, 1.0, ts);
        double qq = (1 - xs * xs) * (1 - ts * p1 * xs);
        double e0 = (1 - xs * y0) / qq;
        double e1 = -xs * y0 / qq;
        double h0 = e0 / 2.0;
        double h1 = (e1 - e0) / 2.0;
        for (std::size_t k = 0; k < n; ++k)
            out.pmf[k] = (static_cast<double>(k) * h0 + h1) /
                         (std::pow(2.0, static_cast<double>(k + 1)) * (h0 + h1));
    }
    return out;
}

}  // namespace nwalk
