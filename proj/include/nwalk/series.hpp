#ifndef NWALK_SERIES_HPP
#define NWALK_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nwalk/rational.hpp"

namespace nwalk {

// Truncated Laurent series over exact rationals. coeffs[i] is the
// coefficient of t^(valuation+i); the series is known modulo t^trunc.
// Invariant: the leading coefficient is nonzero, or the series is
// identically zero up to truncation (empty coefficient vector,
// valuation == trunc by convention).
class RationalSeries {
public:
    static RationalSeries zero(std::int64_t trunc);
    static RationalSeries one(std::int64_t trunc);
    static RationalSeries t_power(std::int64_t e, std::int64_t trunc);
    static RationalSeries monomial(const Rat& c, std::int64_t e, std::int64_t trunc);
    // coefficients starting at exponent `valuation`
    RationalSeries(std::int64_t valuation, std::vector<Rat> coeffs,
                   std::int64_t trunc);
    // dense polynomial c0 + c1 t + ... truncated at `trunc`
    static RationalSeries poly(std::vector<Rat> coeffs, std::int64_t trunc);

    std::int64_t valuation() const { return val_; }
    std::int64_t trunc() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of t^e; zero below the valuation, out_of_range at or
    // beyond the truncation.
    Rat coeff(std::int64_t e) const;

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator-() const;
    RationalSeries operator*(const RationalSeries& o) const;
    // Throws std::domain_error when dividing by an identically-zero series.
    RationalSeries operator/(const RationalSeries& o) const;

    RationalSeries scaled(const Rat& c) const;
    RationalSeries shifted(std::int64_t e) const;  // multiply by t^e
    RationalSeries truncated(std::int64_t trunc) const;
    RationalSeries pow(std::int64_t n) const;

    bool operator==(const RationalSeries& o) const = default;

    std::string to_string() const;
    // {"valuation": v, "coefficients": ["p/q", ...]}
    std::string to_json() const;

private:
    RationalSeries() = default;
    void normalize();

    std::int64_t val_ = 0;
    std::vector<Rat> coeffs_;
    std::int64_t trunc_ = 0;
};

// Square root with even valuation and a perfect-square leading coefficient;
// throws std::domain_error otherwise.
RationalSeries series_sqrt(const RationalSeries& a);

// Evaluates sum_i poly[i] * E^i to truncation (Horner); the caller asserts
// the result is zero when checking an algebraic equation.
RationalSeries algebraic_residual(const std::vector<RationalSeries>& poly,
                                  const RationalSeries& e);

}  // namespace nwalk

#endif
