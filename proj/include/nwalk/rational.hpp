#ifndef NWALK_RATIONAL_HPP
#define NWALK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nwalk {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; this does.
inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rat r(s);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    }
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rat& r) { return r.get_d(); }
inline double to_double(const Int& z) { return z.get_d(); }

}  // namespace nwalk

#endif
