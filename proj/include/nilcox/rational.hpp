#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace nilcox {

// All scalars are exact rationals; nothing in the library touches floating point.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw InvalidParameter("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" in base 10 with optional sign; result is canonicalized.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    std::size_t from = s.find_first_not_of(" \t");
    std::size_t to = s.find_last_not_of(" \t");
    if (from == std::string::npos) throw ParseError("empty rational literal", 0);
    s = s.substr(from, to - from + 1);
    if (s.front() == '+') s.erase(s.begin());
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("malformed rational literal '" + std::string(text) + "'", 0);
    if (q.get_den() == 0)
        throw ParseError("rational literal '" + std::string(text) + "' has zero denominator", 0);
    q.canonicalize();
    return q;
}

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace nilcox
