#include "nwalk/int_set.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nwalk {

IntSet::IntSet(std::initializer_list<std::int64_t> xs)
    : IntSet(std::vector<std::int64_t>(xs)) {}

IntSet::IntSet(std::vector<std::int64_t> xs) : elems_(std::move(xs)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

std::int64_t IntSet::min() const {
    if (empty()) throw std::logic_error("min of empty IntSet");
    return elems_.front();
}

std::int64_t IntSet::max() const {
    if (empty()) throw std::logic_error("max of empty IntSet");
    return elems_.back();
}

bool IntSet::contains(std::int64_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::int64_t IntSet::norm() const { return empty() ? 0 : max() - min(); }

IntSet IntSet::shifted(std::int64_t m) const {
    IntSet r;
    r.elems_.reserve(size());
    for (auto x : elems_) r.elems_.push_back(x + m);
    return r;
}

IntSet IntSet::minus(const IntSet& o) const {
    IntSet r;
    std::set_difference(elems_.begin(), elems_.end(), o.elems_.begin(),
                        o.elems_.end(), std::back_inserter(r.elems_));
    return r;
}

IntSet IntSet::nonnegative_part() const {
    IntSet r;
    auto it = std::lower_bound(elems_.begin(), elems_.end(), 0);
    r.elems_.assign(it, elems_.end());
    return r;
}

std::string IntSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out << ',';
        out << elems_[i];
    }
    out << '}';
    return out.str();
}

IntSet IntSet::parse(const std::string& text) {
    std::size_t a = text.find_first_not_of(" \t");
    std::size_t b = text.find_last_not_of(" \t");
    if (a == std::string::npos || text[a] != '{' || text[b] != '}')
        throw std::invalid_argument("IntSet literal must be braced: " + text);
    std::string body = text.substr(a + 1, b - a - 1);
    std::vector<std::int64_t> xs;
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer in IntSet: '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("bad integer in IntSet: '" + item + "'");
        xs.push_back(v);
    }
    if (!body.empty() && body.find_first_not_of(" \t") == std::string::npos)
        throw std::invalid_argument("bad IntSet literal: " + text);
    return IntSet(std::move(xs));
}

IntSet sumset(const IntSet& s, const IntSet& t) {
    if (s.empty() || t.empty()) return IntSet{};
    // Merge |t| shifted copies of s; results stay sorted per copy.
    std::vector<std::int64_t> acc;
    for (auto b : t) {
        std::vector<std::int64_t> merged;
        merged.reserve(acc.size() + s.size());
        auto it = acc.begin();
        for (auto a : s) {
            std::int64_t v = a + b;
            while (it != acc.end() && *it < v) merged.push_back(*it++);
            if (merged.empty() || merged.back() != v) merged.push_back(v);
        }
        while (it != acc.end()) {
            if (merged.back() != *it) merged.push_back(*it);
            ++it;
        }
        acc = std::move(merged);
    }
    return IntSet(std::move(acc));
}

IntSet nfold_sumset(std::int64_t n, const IntSet& s) {
    IntSet acc{0};
    IntSet base = s;
    // Binary powering over the sumset monoid.
    while (n > 0) {
        if (n & 1) acc = sumset(acc, base);
        n >>= 1;
        if (n) base = sumset(base, base);
    }
    return acc;
}

IntSet prune_bottom(const IntSet& s, const IntSet& t) {
    if (s.empty()) return s;
    return s.minus(t.shifted(s.min()));
}

IntSet prune_top(const IntSet& s, const IntSet& t) {
    if (s.empty()) return s;
    std::vector<std::int64_t> mask;
    mask.reserve(t.size());
    for (auto x : t) mask.push_back(s.max() - x);
    return s.minus(IntSet(std::move(mask)));
}

IntSet conjugate(const IntSet& s) {
    if (s.empty()) return s;
    std::int64_t pivot = s.min() + s.max();
    std::vector<std::int64_t> xs;
    xs.reserve(s.size());
    for (auto x : s) xs.push_back(pivot - x);
    return IntSet(std::move(xs));
}

bool equivalent(const IntSet& s, const IntSet& t) {
    if (s.size() != t.size()) return false;
    if (s.empty()) return true;
    return s == t.shifted(s.min() - t.min());
}

IntSet shift_to_zero(const IntSet& s) {
    if (s.empty()) return s;
    return s.shifted(-s.min());
}

PackedSet pack_set(const IntSet& s) {
    PackedSet p;
    if (s.empty()) return p;
    p.min = s.min();
    p.bits.assign(static_cast<std::size_t>(s.norm() / 64 + 1), 0);
    for (auto x : s) {
        std::uint64_t off = static_cast<std::uint64_t>(x - p.min);
        p.bits[off >> 6] |= std::uint64_t{1} << (off & 63);
    }
    return p;
}

IntSet unpack_set(const PackedSet& p) {
    std::vector<std::int64_t> xs;
    for (std::size_t w = 0; w < p.bits.size(); ++w) {
        std::uint64_t word = p.bits[w];
        while (word) {
            int b = std::countr_zero(word);
            xs.push_back(p.min + static_cast<std::int64_t>(w * 64 + b));
            word &= word - 1;
        }
    }
    return IntSet(std::move(xs));
}

std::size_t PackedSetHash::operator()(const PackedSet& p) const {
    // FNV-1a over the minimum and the mask words.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(p.min));
    for (auto w : p.bits) mix(w);
    return static_cast<std::size_t>(h);
}

std::int64_t frobenius_number(const IntSet& s) {
    if (s.empty()) throw std::invalid_argument("frobenius_number of empty set");
    std::int64_t g = 0;
    for (auto x : s) {
        if (x <= 0) throw std::invalid_argument("frobenius_number needs positive elements");
        g = std::gcd(g, x);
    }
    if (g != 1) throw std::invalid_argument("frobenius_number needs gcd 1");
    // Sieve representability until max(s) consecutive representable values
    // appear; everything beyond is then representable.
    std::int64_t m = s.max();
    std::vector<char> rep;
    rep.push_back(1);  // 0 = empty combination
    std::int64_t last_gap = -1;
    std::int64_t run = 1;
    for (std::int64_t v = 1; run < m; ++v) {
        bool ok = false;
        for (auto x : s) {
            if (v - x >= 0 && rep[static_cast<std::size_t>(v - x)]) {
                ok = true;
                break;
            }
        }
        rep.push_back(ok ? 1 : 0);
        if (ok) {
            ++run;
        } else {
            last_gap = v;
            run = 0;
        }
    }
    return last_gap;
}

}  // namespace nwalk
