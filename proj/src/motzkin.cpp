#include "nwalk/motzkin.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nwalk/count.hpp"

namespace nwalk {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_interval(const IntSet& s) {
    return !s.empty() && s.norm() + 1 == static_cast<std::int64_t>(s.size());
}

bool is_two_progression(const IntSet& s) {
    if (s.empty()) return false;
    if (s.norm() % 2 != 0 || s.norm() / 2 + 1 != static_cast<std::int64_t>(s.size()))
        return false;
    for (auto x : s)
        if ((x - s.min()) % 2 != 0) return false;
    return true;
}

bool is_small_motzkin_step(const IntSet& s) {
    return s == IntSet{-1} || s == IntSet{0} || s == IntSet{1} || s == IntSet{-1, 1};
}

LaurentPoly poly_of(std::initializer_list<std::tuple<int, int, int>> terms) {
    LaurentPoly p;
    for (auto& [c, ex, ey] : terms) p.add_term(c, ex, ey);
    return p;
}

}  // namespace

MotzkinType motzkin_shape(const IntSet& reach) {
    if (is_two_progression(reach)) return MotzkinType::II;
    if (is_interval(reach)) return MotzkinType::I;
    throw std::logic_error("reach set is neither an interval nor a 2-progression: " +
                           reach.to_string());
}

MotzkinType motzkin_walk_type(const Walk& walk) {
    for (auto& s : walk)
        if (!is_small_motzkin_step(s)) return MotzkinType::I;
    return MotzkinType::II;
}

MotzkinType motzkin_meander_type(const Walk& walk) {
    MotzkinType type = MotzkinType::II;
    ReachState st;
    for (auto& s : walk) {
        IntSet prev = st.floored;
        st = step_reach(st, s);
        if (st.floored.empty())
            throw std::invalid_argument("motzkin_meander_type: walk is not a meander");
        if (type == MotzkinType::II) {
            // on reach {0} the floor turns {-1,0} into a plain stay
            bool stays = is_small_motzkin_step(s) ||
                         (prev == IntSet{0} && s == IntSet{-1, 0});
            type = stays ? MotzkinType::II : MotzkinType::I;
        } else if (prev.max() == 1 && s == IntSet{-1}) {
            type = MotzkinType::II;
        }
    }
    return type;
}

MotzkinWalkSeries motzkin_walk_series(std::int64_t order) {
    // M_II = 1 + t (1/xy + 1 + xy + y/x) M_II
    // M_I  = t (1/x + y + y/x) M_II + t (1/xy + 1 + xy + 1/x + y + 2y/x) M_I
    LaurentPoly p2 = poly_of({{1, -1, -1}, {1, 0, 0}, {1, 1, 1}, {1, -1, 1}});
    LaurentPoly p21 = poly_of({{1, -1, 0}, {1, 0, 1}, {1, -1, 1}});
    LaurentPoly p1 = poly_of(
        {{1, -1, -1}, {1, 0, 0}, {1, 1, 1}, {1, -1, 0}, {1, 0, 1}, {2, -1, 1}});
    MotzkinWalkSeries out{BivariateSeries(order), BivariateSeries(order),
                          RationalSeries::zero(order)};
    if (order == 0) return out;
    out.type2.coeff(0) = LaurentPoly::constant(1);
    for (std::int64_t n = 1; n < order; ++n) {
        out.type2.coeff(n) = out.type2.coeff(n - 1) * p2;
        out.type1.coeff(n) =
            out.type2.coeff(n - 1) * p21 + out.type1.coeff(n - 1) * p1;
    }
    out.total_at_11 = (out.type1 + out.type2).sum_series();
    return out;
}

std::vector<std::vector<LaurentPoly>> motzkin_matrix_A() {
    return {{poly_of({{1, -1, -1}, {1, 0, 0}, {1, 1, 1}, {1, -1, 1}}), LaurentPoly()},
            {poly_of({{1, -1, -1}, {1, 0, 0}, {1, -1, 0}}),
             poly_of({{1, -1, -1}, {1, 0, 0}, {1, 1, 1}, {1, -1, 0}, {1, 0, 1},
                      {2, -1, 1}})}};
}

std::vector<std::vector<LaurentPoly>> motzkin_matrix_B() {
    return {{poly_of({{1, 1, -1}, {1, 0, 0}, {2, 1, 1}}), LaurentPoly()},
            {poly_of({{1, 0, -1}, {2, 0, 0}}),
             poly_of({{1, 0, -1}, {2, 0, 0}, {1, 1, 1}, {3, 0, 1}})}};
}

std::vector<std::vector<LaurentPoly>> motzkin_matrix_C() {
    return {{poly_of({{2, 0, 0}, {2, 1, 1}}), poly_of({{1, 0, 0}})},
            {poly_of({{2, 0, 0}}), poly_of({{1, 1, 1}, {2, 0, 0}, {3, 0, 1}})}};
}

MotzkinMeanderSeries motzkin_meander_vector(std::int64_t order) {
    auto A = motzkin_matrix_A();
    auto B = motzkin_matrix_B();
    auto C = motzkin_matrix_C();
    std::vector<BivariateSeries> v{BivariateSeries(order), BivariateSeries(order)};
    if (order > 0) v[0].coeff(0) = LaurentPoly::constant(1);
    for (std::int64_t n = 1; n < order; ++n) {
        for (int i = 0; i < 2; ++i) {
            LaurentPoly acc;
            for (int j = 0; j < 2; ++j) {
                LaurentPoly whole = v[j].coeff(n - 1);
                LaurentPoly at_x0 = extract_x_coeff(whole, 0);
                LaurentPoly at_00 = extract_y_coeff(at_x0, 0);
                acc = acc + A[i][j] * (whole - at_x0) +
                      B[i][j] * (at_x0 - at_00) + C[i][j] * at_00;
            }
            v[i].coeff(n) = acc;
        }
    }
    MotzkinMeanderSeries out{v[0], v[1], BivariateSeries(order)};
    out.meander_total = v[0] + v[1].mul_poly(LaurentPoly::monomial(1, 0, 1));
    return out;
}

namespace {

RationalSeries kernel_root(const std::vector<Rat>& num_poly,
                           const std::vector<Rat>& sqrt_arg, const Rat& denom_c,
                           std::int64_t order) {
    // (num_poly(t) - sqrt(sqrt_arg(t))) / (denom_c * t)
    std::int64_t o = order + 1;
    RationalSeries num = RationalSeries::poly(num_poly, o) -
                         series_sqrt(RationalSeries::poly(sqrt_arg, o));
    return num / RationalSeries::monomial(denom_c, 1, o);
}

}  // namespace

RationalSeries motzkin_X1(const Rat& y, std::int64_t order) {
    if (y == 0) throw std::domain_error("motzkin_X1 needs y != 0");
    return kernel_root({1, -1}, {1, -2, -(4 * y * y + 3)}, 2 * y, order);
}

RationalSeries motzkin_X2(const Rat& y, std::int64_t order) {
    if (y == 0) throw std::domain_error("motzkin_X2 needs y != 0");
    return kernel_root({1, -(y + 1)}, {1, -2 * y - 2, -(7 * y * y + 2 * y + 3)},
                       2 * y, order);
}

RationalSeries motzkin_Y1(std::int64_t order) {
    // (t - 1 + sqrt(1 - 2t - 7t^2)) / (4t)
    std::int64_t o = order + 1;
    RationalSeries num = RationalSeries::poly({-1, 1}, o) +
                         series_sqrt(RationalSeries::poly({1, -2, -7}, o));
    return num / RationalSeries::monomial(4, 1, o);
}

RationalSeries motzkin_Y2(std::int64_t order) {
    // (1 - 2t - sqrt(1 - 4t - 12t^2)) / (8t)
    std::int64_t o = order + 1;
    RationalSeries num = RationalSeries::poly({1, -2}, o) -
                         series_sqrt(RationalSeries::poly({1, -4, -12}, o));
    return num / RationalSeries::monomial(8, 1, o);
}

RationalSeries motzkin_meander_closed_form(std::int64_t order) {
    std::int64_t o = order + 1;
    RationalSeries root = series_sqrt(RationalSeries::poly({1, 2}, o) *
                                      RationalSeries::poly({1, -6}, o));
    RationalSeries num = RationalSeries::poly({-1, 10}, o) + root;
    RationalSeries den = RationalSeries::monomial(8, 1, o) *
                         RationalSeries::poly({1, -7}, o);
    return (num / den).truncated(order);
}

std::vector<RationalSeries> motzkin_excursion_quartic(std::int64_t order) {
    auto poly = [order](std::vector<Rat> cs) {
        return RationalSeries::poly(std::move(cs), order);
    };
    // coefficients of E^0..E^4, exactly as printed
    RationalSeries c4 = poly({0, 0, 0, 0, 0, 256}) *
                        poly({1, 2}).pow(2) * poly({-1, 7}).pow(2) *
                        poly({-1, 4}).pow(2);
    RationalSeries c3 = poly({0, 0, 16}) * poly({1, 2}) * poly({-1, 7}) *
                        poly({-1, 4}) * poly({1, -15, 69, -85, -192, 564});
    RationalSeries c2 = poly({-1, 27, -303, 1742, -4624, -864, 36720, -68144,
                              -44448, 197264});
    RationalSeries c1 =
        poly({2, -45, 375, -1256, 121, 8901, -14436, -12220, 36000});
    RationalSeries c0 = poly({-1, 18, -108, 170, 591, -1901, -456, 4288});
    return {c0, c1, c2, c3, c4};
}

std::string ClosedFormReport::to_string() const {
    std::ostringstream out;
    out << "meander closed form vs DP: " << (meander_ok ? "ok" : "MISMATCH");
    if (!meander_ok) out << " (first differing order " << meander_first_mismatch << ")";
    out << "\nexcursion quartic residual: " << (quartic_ok ? "0 (ok)" : "NONZERO");
    if (!quartic_ok) out << " (first nonzero order " << quartic_first_nonzero << ")";
    return out.str();
}

ClosedFormReport motzkin_closed_form_checks(std::int64_t order) {
    if (order < 15)
        throw std::invalid_argument("motzkin_closed_form_checks needs order >= 15");
    ClosedFormReport rep;
    NStepSet S = NStepSet::motzkin_unweighted();

    RationalSeries closed = motzkin_meander_closed_form(order);
    std::vector<Rat> dp = count_by_dp(S, order - 1, WalkFamily::Meander);
    rep.meander_ok = true;
    for (std::int64_t n = 0; n < order; ++n) {
        if (closed.coeff(n) != dp[static_cast<std::size_t>(n)]) {
            rep.meander_ok = false;
            rep.meander_first_mismatch = n;
            break;
        }
    }

    std::int64_t qorder = std::max<std::int64_t>(order, 20);
    std::vector<Rat> exc = count_by_dp(S, qorder - 1, WalkFamily::Excursion);
    RationalSeries e = RationalSeries::poly(exc, qorder);
    RationalSeries residual = algebraic_residual(motzkin_excursion_quartic(qorder), e);
    rep.quartic_ok = true;
    for (std::int64_t n = 0; n < std::min<std::int64_t>(residual.trunc(), 15); ++n) {
        if (residual.coeff(n) != 0) {
            rep.quartic_ok = false;
            rep.quartic_first_nonzero = n;
            break;
        }
    }
    return rep;
}

double motzkin_gamma() {
    auto f = [](double g) {
        double g2 = g * g;
        return 1024 * g2 * g2 - 8019 * g2 + 2916;
    };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        if (f(lo) * f(mid) <= 0)
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

double motzkin_leading_term(MotzkinClass c, std::int64_t n) {
    double pw = std::pow(7.0, static_cast<double>(n));
    switch (c) {
        case MotzkinClass::Walk: return pw;
        case MotzkinClass::Bridge: return pw;
        case MotzkinClass::Meander: return 0.75 * pw;
        case MotzkinClass::Excursion: return 9.0 / 16.0 * pw;
    }
    return 0.0;
}

double motzkin_asymptotic(MotzkinClass c, std::int64_t n) {
    double nn = static_cast<double>(n);
    double six = std::pow(6.0, nn);
    switch (c) {
        case MotzkinClass::Walk:
            return std::pow(7.0, nn);
        case MotzkinClass::Bridge:
            return std::pow(7.0, nn) - std::sqrt(3.0 / kPi) * six / std::sqrt(nn);
        case MotzkinClass::Meander:
            return 0.75 * std::pow(7.0, nn) +
                   1.5 * std::sqrt(3.0) * six / std::sqrt(kPi * nn * nn * nn);
        case MotzkinClass::Excursion:
            return 9.0 / 16.0 * std::pow(7.0, nn) -
                   motzkin_gamma() * six / std::sqrt(kPi * nn * nn * nn);
    }
    return 0.0;
}

}  // namespace nwalk
