#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "coxeter.hpp"
#include "errors.hpp"
#include "typeatilde.hpp"

namespace nilcox {

namespace detail {

inline int parse_int(std::string_view s, std::size_t& pos, std::size_t base_offset) {
    int value = 0;
    const char* first = s.data() + pos;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first)
        throw ParseError("expected an integer", base_offset + pos);
    pos += static_cast<std::size_t>(ptr - first);
    return value;
}

inline void expect_char(std::string_view s, std::size_t& pos, char c, std::size_t base_offset) {
    if (pos >= s.size() || s[pos] != c)
        throw ParseError(std::string("expected '") + c + "'", base_offset + pos);
    ++pos;
}

} // namespace detail

// Grammar: whitespace-separated tokens, each either a letter `s<int>` or an
// interval literal `asc(a,b)` / `desc(a,b)`, optionally repeated as `...^h`.
// Integers are reduced mod m; interval literals expand through
// interval_expression. h must be positive.
inline Expression parse_expression(std::string_view text, int m) {
    if (m < 1) throw InvalidParameter("expression grammar needs a positive modulus");
    Expression out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        std::size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        const std::string_view tok = text.substr(start, end - start);
        std::size_t p = 0;
        if (tok[0] == 's') {
            p = 1;
            const int letter = detail::parse_int(tok, p, start);
            if (p != tok.size())
                throw ParseError("trailing characters after letter token '" + std::string(tok) + "'",
                                 start + p);
            out.letters.push_back(mod_residue(letter, m));
        } else if (tok.starts_with("asc(") || tok.starts_with("desc(")) {
            const IntervalDirection dir =
                tok[0] == 'a' ? IntervalDirection::ascending : IntervalDirection::descending;
            p = tok[0] == 'a' ? 4 : 5;
            const int a = detail::parse_int(tok, p, start);
            detail::expect_char(tok, p, ',', start);
            const int b = detail::parse_int(tok, p, start);
            detail::expect_char(tok, p, ')', start);
            int h = 1;
            if (p < tok.size()) {
                detail::expect_char(tok, p, '^', start);
                h = detail::parse_int(tok, p, start);
                if (p != tok.size())
                    throw ParseError("trailing characters after repetition count", start + p);
                if (h < 1) throw ParseError("repetition count must be positive", start);
            }
            if (m < 2) throw ParseError("interval literals need at least 2 residues", start);
            const Expression one = interval_expression(m, make_interval(m, a, b, dir));
            for (int rep = 0; rep < h; ++rep)
                out.letters.insert(out.letters.end(), one.letters.begin(), one.letters.end());
        } else {
            throw ParseError("unrecognized token '" + std::string(tok) + "'", start);
        }
        i = end;
    }
    return out;
}

// Integers in the text are positions into the realization's ordered index set;
// for the cyclic realizations positions and labels coincide.
inline Expression parse_expression(std::string_view text, const Realization& real) {
    const Expression positions = parse_expression(text, static_cast<int>(real.size()));
    Expression out;
    out.letters.reserve(positions.letters.size());
    for (int p : positions.letters) out.letters.push_back(real.label_at(static_cast<std::size_t>(p)));
    return out;
}

} // namespace nilcox
