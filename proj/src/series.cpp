#include "nwalk/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nwalk {

RationalSeries RationalSeries::zero(std::int64_t trunc) {
    RationalSeries s;
    s.val_ = trunc;
    s.trunc_ = trunc;
    return s;
}

RationalSeries RationalSeries::one(std::int64_t trunc) {
    return monomial(Rat(1), 0, trunc);
}

RationalSeries RationalSeries::t_power(std::int64_t e, std::int64_t trunc) {
    return monomial(Rat(1), e, trunc);
}

RationalSeries RationalSeries::monomial(const Rat& c, std::int64_t e,
                                        std::int64_t trunc) {
    if (e >= trunc || c == 0) return zero(trunc);
    return RationalSeries(e, {c}, trunc);
}

RationalSeries::RationalSeries(std::int64_t valuation, std::vector<Rat> coeffs,
                               std::int64_t trunc)
    : val_(valuation), coeffs_(std::move(coeffs)), trunc_(trunc) {
    if (val_ + static_cast<std::int64_t>(coeffs_.size()) > trunc_)
        coeffs_.resize(static_cast<std::size_t>(std::max<std::int64_t>(0, trunc_ - val_)));
    normalize();
}

RationalSeries RationalSeries::poly(std::vector<Rat> coeffs, std::int64_t trunc) {
    return RationalSeries(0, std::move(coeffs), trunc);
}

void RationalSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        val_ = trunc_;
        return;
    }
    if (lead) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<std::int64_t>(lead);
    }
    // trailing zeros are implied by the truncation; keep one canonical form
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RationalSeries::coeff(std::int64_t e) const {
    if (e >= trunc_)
        throw std::out_of_range("series coefficient beyond truncation");
    if (e < val_ || e >= val_ + static_cast<std::int64_t>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(e - val_)];
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    std::int64_t trunc = std::min(trunc_, o.trunc_);
    std::int64_t val = std::min(val_, o.val_);
    std::int64_t len = std::max<std::int64_t>(0, trunc - val);
    std::vector<Rat> cs(static_cast<std::size_t>(len));
    auto acc = [&](const RationalSeries& s) {
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            std::int64_t e = s.val_ + static_cast<std::int64_t>(i);
            if (e < trunc) cs[static_cast<std::size_t>(e - val)] += s.coeffs_[i];
        }
    };
    acc(*this);
    acc(o);
    return RationalSeries(val, std::move(cs), trunc);
}

RationalSeries RationalSeries::operator-() const {
    RationalSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
    return *this + (-o);
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    // Zero series carry their truncation through the product.
    std::int64_t trunc = std::min(trunc_ + o.val_, o.trunc_ + val_);
    if (is_zero() || o.is_zero()) return zero(trunc);
    std::int64_t val = val_ + o.val_;
    std::int64_t len = std::max<std::int64_t>(0, trunc - val);
    std::vector<Rat> cs(static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            std::int64_t e = static_cast<std::int64_t>(i + j);
            if (e >= len) break;
            cs[static_cast<std::size_t>(e)] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return RationalSeries(val, std::move(cs), trunc);
}

RationalSeries RationalSeries::operator/(const RationalSeries& o) const {
    if (o.is_zero()) throw std::domain_error("division by identically-zero series");
    std::int64_t len = std::min(trunc_ - val_, o.trunc_ - o.val_);
    std::int64_t val = val_ - o.val_;
    if (is_zero()) return zero(trunc_ - o.val_);
    std::vector<Rat> q(static_cast<std::size_t>(std::max<std::int64_t>(0, len)));
    for (std::size_t i = 0; i < q.size(); ++i) {
        Rat acc = i < coeffs_.size() ? coeffs_[i] : Rat(0);
        for (std::size_t j = 0; j < i; ++j) {
            std::size_t k = i - j;
            if (k < o.coeffs_.size()) acc -= q[j] * o.coeffs_[k];
        }
        q[i] = acc / o.coeffs_[0];
    }
    return RationalSeries(val, std::move(q), val + len);
}

RationalSeries RationalSeries::scaled(const Rat& c) const {
    if (c == 0) return zero(trunc_);
    RationalSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

RationalSeries RationalSeries::shifted(std::int64_t e) const {
    RationalSeries r = *this;
    r.val_ += e;
    r.trunc_ += e;
    return r;
}

RationalSeries RationalSeries::truncated(std::int64_t trunc) const {
    if (trunc >= trunc_) return *this;
    RationalSeries r = *this;
    r.trunc_ = trunc;
    if (r.val_ + static_cast<std::int64_t>(r.coeffs_.size()) > trunc) {
        std::int64_t keep = std::max<std::int64_t>(0, trunc - r.val_);
        r.coeffs_.resize(static_cast<std::size_t>(keep));
    }
    r.normalize();
    return r;
}

RationalSeries RationalSeries::pow(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("negative series power");
    RationalSeries acc = one(n == 0 ? trunc_ : trunc_ + (n - 1) * val_);
    RationalSeries base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

std::string RationalSeries::to_string() const {
    if (is_zero()) return "0 + O(t^" + std::to_string(trunc_) + ")";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        std::int64_t e = val_ + static_cast<std::int64_t>(i);
        if (!first) out << (c > 0 ? " + " : " - ");
        Rat a = (!first && c < 0) ? Rat(-c) : c;
        first = false;
        if (e == 0) {
            out << rat_to_string(a);
        } else {
            if (a != 1) out << rat_to_string(a) << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    out << " + O(t^" << trunc_ << ")";
    return out.str();
}

std::string RationalSeries::to_json() const {
    std::ostringstream out;
    out << "{\"valuation\": " << (is_zero() ? 0 : val_) << ", \"coefficients\": [";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ", ";
        out << '"' << rat_to_string(coeffs_[i]) << '"';
    }
    out << "]}";
    return out.str();
}

namespace {

bool rat_sqrt(const Rat& a, Rat& out) {
    if (a < 0) return false;
    mpz_class num = a.get_num(), den = a.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rat(rn) / Rat(rd);
    return true;
}

}  // namespace

RationalSeries series_sqrt(const RationalSeries& a) {
    if (a.is_zero())
        return RationalSeries::zero(a.trunc() - a.trunc() / 2);
    if (a.valuation() % 2 != 0)
        throw std::domain_error("series_sqrt: odd valuation");
    Rat r0;
    if (!rat_sqrt(a.coeff(a.valuation()), r0))
        throw std::domain_error("series_sqrt: leading coefficient is not a rational square");
    std::int64_t len = a.trunc() - a.valuation();
    std::vector<Rat> r(static_cast<std::size_t>(len));
    r[0] = r0;
    for (std::int64_t i = 1; i < len; ++i) {
        Rat acc = a.coeff(a.valuation() + i);
        for (std::int64_t j = 1; j < i; ++j)
            acc -= r[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(i - j)];
        r[static_cast<std::size_t>(i)] = acc / (2 * r0);
    }
    std::int64_t val = a.valuation() / 2;
    return RationalSeries(val, std::move(r), val + len);
}

RationalSeries algebraic_residual(const std::vector<RationalSeries>& poly,
                                  const RationalSeries& e) {
    if (poly.empty()) return RationalSeries::zero(e.trunc());
    RationalSeries acc = poly.back();
    for (std::size_t i = poly.size() - 1; i-- > 0;) acc = acc * e + poly[i];
    return acc;
}

}  // namespace nwalk
