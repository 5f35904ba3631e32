#include "nwalk/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace nwalk {

LaurentPoly LaurentPoly::monomial(const Rat& c, std::int64_t ex, std::int64_t ey) {
    LaurentPoly p;
    p.add_term(c, ex, ey);
    return p;
}

Rat LaurentPoly::coeff(std::int64_t ex, std::int64_t ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(const Rat& c, std::int64_t ex, std::int64_t ey) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({ex, ey}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(c, e.first, e.second);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(-c, e.first, e.second);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_)
            r.add_term(c1 * c2, e1.first + e2.first, e1.second + e2.second);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

namespace {

Rat rat_int_pow(const Rat& base, std::int64_t e) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 raised to a negative exponent");
        return 0;
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    std::int64_t n = e < 0 ? -e : e;
    Rat acc = 1;
    while (n) {
        if (n & 1) acc *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return acc;
}

}  // namespace

Rat LaurentPoly::eval(const Rat& x, const Rat& y) const {
    Rat acc = 0;
    for (auto& [e, c] : terms_)
        acc += c * rat_int_pow(x, e.first) * rat_int_pow(y, e.second);
    return acc;
}

Rat LaurentPoly::sum_coeffs() const {
    Rat acc = 0;
    for (auto& [e, c] : terms_) acc += c;
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        Rat a = (!first && c < 0) ? Rat(-c) : c;
        first = false;
        bool unit = a == 1 && (e.first != 0 || e.second != 0);
        if (!unit) out << rat_to_string(a);
        if (e.first != 0) {
            if (!unit) out << "*";
            out << "x";
            if (e.first != 1) out << "^" << e.first;
            unit = true;
        }
        if (e.second != 0) {
            if (!unit) out << "*";
            out << "y";
            if (e.second != 1) out << "^" << e.second;
        }
    }
    return out.str();
}

namespace {

template <class Pred>
LaurentPoly filter_terms(const LaurentPoly& p, Pred keep) {
    LaurentPoly r;
    for (auto& [e, c] : p.terms())
        if (keep(e.first, e.second)) r.add_term(c, e.first, e.second);
    return r;
}

}  // namespace

LaurentPoly extract_x_positive(const LaurentPoly& p) {
    return filter_terms(p, [](std::int64_t ex, std::int64_t) { return ex > 0; });
}
LaurentPoly extract_x_nonpositive(const LaurentPoly& p) {
    return filter_terms(p, [](std::int64_t ex, std::int64_t) { return ex <= 0; });
}
LaurentPoly extract_y_negative(const LaurentPoly& p) {
    return filter_terms(p, [](std::int64_t, std::int64_t ey) { return ey < 0; });
}
LaurentPoly extract_y_nonnegative(const LaurentPoly& p) {
    return filter_terms(p, [](std::int64_t, std::int64_t ey) { return ey >= 0; });
}
LaurentPoly extract_x_residue(const LaurentPoly& p, std::int64_t r, std::int64_t g) {
    if (g < 1) throw std::invalid_argument("residue extraction needs g >= 1");
    std::int64_t rr = ((r % g) + g) % g;
    return filter_terms(p, [rr, g](std::int64_t ex, std::int64_t) {
        return ((ex % g) + g) % g == rr;
    });
}
LaurentPoly extract_x_coeff(const LaurentPoly& p, std::int64_t ex) {
    return filter_terms(p, [ex](std::int64_t e, std::int64_t) { return e == ex; });
}
LaurentPoly extract_y_coeff(const LaurentPoly& p, std::int64_t ey) {
    return filter_terms(p, [ey](std::int64_t, std::int64_t e) { return e == ey; });
}

BivariateSeries::BivariateSeries(std::int64_t trunc) {
    if (trunc < 0) throw std::invalid_argument("negative truncation");
    coeffs_.resize(static_cast<std::size_t>(trunc));
}

BivariateSeries BivariateSeries::one(std::int64_t trunc) {
    BivariateSeries s(trunc);
    if (trunc > 0) s.coeffs_[0] = LaurentPoly::constant(1);
    return s;
}

const LaurentPoly& BivariateSeries::coeff(std::int64_t n) const {
    return coeffs_.at(static_cast<std::size_t>(n));
}

LaurentPoly& BivariateSeries::coeff(std::int64_t n) {
    return coeffs_.at(static_cast<std::size_t>(n));
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
    BivariateSeries r(std::min(trunc(), o.trunc()));
    for (std::int64_t n = 0; n < r.trunc(); ++n)
        r.coeff(n) = coeff(n) + o.coeff(n);
    return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
    BivariateSeries r(std::min(trunc(), o.trunc()));
    for (std::int64_t n = 0; n < r.trunc(); ++n)
        r.coeff(n) = coeff(n) - o.coeff(n);
    return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    BivariateSeries r(std::min(trunc(), o.trunc()));
    for (std::int64_t i = 0; i < trunc(); ++i) {
        if (coeff(i).is_zero()) continue;
        for (std::int64_t j = 0; i + j < r.trunc() && j < o.trunc(); ++j)
            r.coeff(i + j) = r.coeff(i + j) + coeff(i) * o.coeff(j);
    }
    return r;
}

BivariateSeries BivariateSeries::mul_poly(const LaurentPoly& p) const {
    BivariateSeries r(trunc());
    for (std::int64_t n = 0; n < trunc(); ++n) r.coeff(n) = coeff(n) * p;
    return r;
}

BivariateSeries BivariateSeries::shifted_t(std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative t-shift");
    BivariateSeries r(trunc() + e);
    for (std::int64_t n = 0; n < trunc(); ++n) r.coeff(n + e) = coeff(n);
    return r;
}

BivariateSeries BivariateSeries::geometric(const LaurentPoly& p, std::int64_t trunc) {
    BivariateSeries r(trunc);
    if (trunc == 0) return r;
    r.coeff(0) = LaurentPoly::constant(1);
    for (std::int64_t n = 1; n < trunc; ++n) r.coeff(n) = r.coeff(n - 1) * p;
    return r;
}

BivariateSeries BivariateSeries::map_coeffs(LaurentPoly (*f)(const LaurentPoly&)) const {
    BivariateSeries r(trunc());
    for (std::int64_t n = 0; n < trunc(); ++n) r.coeff(n) = f(coeff(n));
    return r;
}

RationalSeries BivariateSeries::eval(const Rat& x, const Rat& y) const {
    std::vector<Rat> cs;
    cs.reserve(coeffs_.size());
    for (auto& p : coeffs_) cs.push_back(p.eval(x, y));
    return RationalSeries::poly(std::move(cs), trunc());
}

RationalSeries BivariateSeries::sum_series() const {
    std::vector<Rat> cs;
    cs.reserve(coeffs_.size());
    for (auto& p : coeffs_) cs.push_back(p.sum_coeffs());
    return RationalSeries::poly(std::move(cs), trunc());
}

BivariateSeries extract_x_positive(const BivariateSeries& f) {
    return f.map_coeffs(extract_x_positive);
}
BivariateSeries extract_x_nonpositive(const BivariateSeries& f) {
    return f.map_coeffs(extract_x_nonpositive);
}
BivariateSeries extract_y_negative(const BivariateSeries& f) {
    return f.map_coeffs(extract_y_negative);
}
BivariateSeries extract_y_nonnegative(const BivariateSeries& f) {
    return f.map_coeffs(extract_y_nonnegative);
}
BivariateSeries extract_x_residue(const BivariateSeries& f, std::int64_t r,
                                  std::int64_t g) {
    BivariateSeries out(f.trunc());
    for (std::int64_t n = 0; n < f.trunc(); ++n)
        out.coeff(n) = extract_x_residue(f.coeff(n), r, g);
    return out;
}
BivariateSeries extract_x_coeff(const BivariateSeries& f, std::int64_t ex) {
    BivariateSeries out(f.trunc());
    for (std::int64_t n = 0; n < f.trunc(); ++n)
        out.coeff(n) = extract_x_coeff(f.coeff(n), ex);
    return out;
}
BivariateSeries extract_y_coeff(const BivariateSeries& f, std::int64_t ey) {
    BivariateSeries out(f.trunc());
    for (std::int64_t n = 0; n < f.trunc(); ++n)
        out.coeff(n) = extract_y_coeff(f.coeff(n), ey);
    return out;
}

}  // namespace nwalk
