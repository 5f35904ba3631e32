#ifndef NWALK_LAURENT_HPP
#define NWALK_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nwalk/rational.hpp"
#include "nwalk/series.hpp"

namespace nwalk {

// Sparse Laurent polynomial in x and y with exact rational coefficients.
class LaurentPoly {
public:
    using Expo = std::pair<std::int64_t, std::int64_t>;  // (x exponent, y exponent)

    LaurentPoly() = default;
    static LaurentPoly monomial(const Rat& c, std::int64_t ex, std::int64_t ey);
    static LaurentPoly constant(const Rat& c) { return monomial(c, 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    Rat coeff(std::int64_t ex, std::int64_t ey) const;

    void add_term(const Rat& c, std::int64_t ex, std::int64_t ey);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Rat& c) const;

    bool operator==(const LaurentPoly& o) const = default;

    Rat eval(const Rat& x, const Rat& y) const;  // requires x,y != 0 when
                                                 // negative exponents appear
    Rat sum_coeffs() const;                      // evaluation at x = y = 1

    std::string to_string() const;

private:
    std::map<Expo, Rat> terms_;
};

// Coefficientwise selections; all are linear and idempotent.
LaurentPoly extract_x_positive(const LaurentPoly& p);
LaurentPoly extract_x_nonpositive(const LaurentPoly& p);
LaurentPoly extract_y_negative(const LaurentPoly& p);
LaurentPoly extract_y_nonnegative(const LaurentPoly& p);
// Keeps x-exponents congruent to r mod g (direct exponent filter standing in
// for the root-of-unity sum). Requires g >= 1.
LaurentPoly extract_x_residue(const LaurentPoly& p, std::int64_t r, std::int64_t g);
LaurentPoly extract_x_coeff(const LaurentPoly& p, std::int64_t ex);
LaurentPoly extract_y_coeff(const LaurentPoly& p, std::int64_t ey);

// Power series in t (valuation 0) whose coefficients are Laurent polynomials
// in x and y; coeffs()[n] is the t^n coefficient, known modulo t^trunc.
class BivariateSeries {
public:
    explicit BivariateSeries(std::int64_t trunc);
    static BivariateSeries one(std::int64_t trunc);

    std::int64_t trunc() const { return static_cast<std::int64_t>(coeffs_.size()); }
    const LaurentPoly& coeff(std::int64_t n) const;
    LaurentPoly& coeff(std::int64_t n);

    BivariateSeries operator+(const BivariateSeries& o) const;
    BivariateSeries operator-(const BivariateSeries& o) const;
    BivariateSeries operator*(const BivariateSeries& o) const;
    BivariateSeries mul_poly(const LaurentPoly& p) const;
    BivariateSeries shifted_t(std::int64_t e) const;  // multiply by t^e, e >= 0

    // 1 / (1 - t*p); the geometric walk series over a step polynomial.
    static BivariateSeries geometric(const LaurentPoly& p, std::int64_t trunc);

    BivariateSeries map_coeffs(LaurentPoly (*f)(const LaurentPoly&)) const;

    RationalSeries eval(const Rat& x, const Rat& y) const;
    RationalSeries sum_series() const;  // x = y = 1

    bool operator==(const BivariateSeries& o) const = default;

private:
    std::vector<LaurentPoly> coeffs_;
};

BivariateSeries extract_x_positive(const BivariateSeries& f);
BivariateSeries extract_x_nonpositive(const BivariateSeries& f);
BivariateSeries extract_y_negative(const BivariateSeries& f);
BivariateSeries extract_y_nonnegative(const BivariateSeries& f);
BivariateSeries extract_x_residue(const BivariateSeries& f, std::int64_t r,
                                  std::int64_t g);
BivariateSeries extract_x_coeff(const BivariateSeries& f, std::int64_t ex);
BivariateSeries extract_y_coeff(const BivariateSeries& f, std::int64_t ey);

}  // namespace nwalk

#endif
