#pragma once

#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "errors.hpp"
#include "trimat.hpp"

namespace nilcox {

inline int mod_residue(int x, int m) { return ((x % m) + m) % m; }

enum class IntervalDirection { ascending, descending };

// Cyclic run of residues: ascending steps +1 from a to b, descending steps -1.
// Both ends are normalized mod m; the length is always between 1 and m.
struct Interval {
    int a = 0;
    int b = 0;
    IntervalDirection dir = IntervalDirection::ascending;

    bool operator==(const Interval&) const = default;
};

inline Interval make_interval(int m, int a, int b, IntervalDirection dir) {
    if (m < 2) throw InvalidParameter("intervals need at least 2 residues");
    return {mod_residue(a, m), mod_residue(b, m), dir};
}

inline int interval_length(int m, const Interval& iv) {
    const int diff = iv.dir == IntervalDirection::ascending ? iv.b - iv.a : iv.a - iv.b;
    return mod_residue(diff, m) + 1;
}

inline Expression interval_expression(int m, const Interval& iv) {
    const int len = interval_length(m, iv);
    const int step = iv.dir == IntervalDirection::ascending ? 1 : -1;
    Expression w;
    w.letters.reserve(len);
    for (int k = 0; k < len; ++k) w.letters.push_back(mod_residue(iv.a + step * k, m));
    return w;
}

// Sum of the simple roots visited by the interval. A full cycle sums every
// simple root once, which is the radical vector (zero modulo the radical).
inline RootVector alpha_interval(int m, const Interval& iv) {
    RootVector v;
    for (int a : interval_expression(m, iv).letters) v += RootVector::unit(a);
    return v;
}

// Closed form of the extended matrix of an interval, no Demazure computation:
//  - below-diagonal entries are all -1 and Q entry k is the alpha of the first
//    k letters, except
//  - a full cycle replaces the last row by [-2, -1, ..., -1, 0] with Q = alpha_a.
inline ExtendedTriMatrix interval_extended_matrix(int m, const Interval& iv) {
    const Expression w = interval_expression(m, iv);
    const std::size_t n = w.letters.size();
    TriMatrix t(n);
    std::vector<RootVector> q;
    q.reserve(n);
    RootVector prefix;
    for (std::size_t k = 0; k < n; ++k) {
        prefix += RootVector::unit(w.letters[k]);
        q.push_back(prefix);
        for (std::size_t j = 0; j < k; ++j) t.set(k, j, Rational(-1));
    }
    if (n == static_cast<std::size_t>(m)) {
        q[n - 1] = RootVector::unit(iv.a);
        t.set(n - 1, 0, Rational(-2));
    }
    return {w, std::move(q), t};
}

// s_c applied to the alpha of an interval together with the Demazure value,
// read off the closed tables. Valid for interval lengths 1 .. m-1; the length
// m-1 case merges the two lowering rows into a single -2 row.
inline std::pair<RootVector, Rational> table_action(int m, int c, const Interval& iv) {
    const int len = interval_length(m, iv);
    if (len >= m) throw InvalidParameter("table action needs interval length below m");
    c = mod_residue(c, m);
    const bool asc = iv.dir == IntervalDirection::ascending;
    const int step = asc ? 1 : -1;
    const auto alpha = [&](int a, int b) { return alpha_interval(m, make_interval(m, a, b, iv.dir)); };

    // One-letter interval hit on its own letter: s_a(alpha_a) = -alpha_a.
    if (len == 1 && c == iv.a) return {-RootVector::unit(iv.a), Rational(2)};
    if (len == m - 1) {
        // Both extension slots coincide one past each end; the rows merge.
        if (c == mod_residue(iv.a - step, m)) return {RootVector::unit(c), Rational(-2)};
        if (c == iv.a) return {alpha(iv.a + step, iv.b), Rational(1)};
        if (c == iv.b) return {alpha(iv.a, iv.b - step), Rational(1)};
        return {alpha_interval(m, iv), Rational(0)};
    }
    if (c == mod_residue(iv.a - step, m)) return {alpha(c, iv.b), Rational(-1)};
    if (c == mod_residue(iv.b + step, m)) return {alpha(iv.a, c), Rational(-1)};
    if (c == iv.a) return {alpha(iv.a + step, iv.b), Rational(1)};
    if (c == iv.b) return {alpha(iv.a, iv.b - step), Rational(1)};
    return {alpha_interval(m, iv), Rational(0)};
}

enum class LinePattern { undetermined, ascending, descending };

// One abacus line: the symbols placed on it, in placement order. A line is
// undetermined exactly while it holds a single symbol.
struct AbacusLine {
    std::vector<int> symbols;
    LinePattern pattern = LinePattern::undetermined;

    bool operator==(const AbacusLine&) const = default;
};

struct Abacus {
    std::vector<AbacusLine> lines;

    bool operator==(const Abacus&) const = default;
};

inline bool residues_adjacent_or_equal(int m, int x, int y) {
    const int d = mod_residue(x - y, m);
    return d == 0 || d == 1 || d == m - 1;
}

// Places the letters of u line by line: each symbol lands on the bottom-most
// line holding a neighbor (equal or +-1 mod m). It extends that line only when
// it continues the line's step pattern from the rightmost symbol and the line
// is still shorter than a full cycle; otherwise it opens a new line below.
inline Abacus abacus(int m, const Expression& u) {
    if (m < 2) throw InvalidParameter("abacus needs at least 2 residues");
    Abacus out;
    for (int raw : u.letters) {
        const int x = raw;
        if (x < 0 || x >= m)
            throw InvalidParameter("letter s" + std::to_string(x) + " outside residues mod " +
                                   std::to_string(m));
        AbacusLine* host = nullptr;
        for (std::size_t j = out.lines.size(); j-- > 0;) {
            const auto& sym = out.lines[j].symbols;
            bool near = false;
            for (int y : sym)
                if (residues_adjacent_or_equal(m, x, y)) {
                    near = true;
                    break;
                }
            if (near) {
                host = &out.lines[j];
                break;
            }
        }
        bool placed = false;
        if (host && host->symbols.size() < static_cast<std::size_t>(m)) {
            const int b = host->symbols.back();
            const bool step_up = mod_residue(x - b, m) == 1;
            const bool step_down = mod_residue(b - x, m) == 1;
            if (host->pattern == LinePattern::undetermined) {
                if (step_up) {
                    host->pattern = LinePattern::ascending;
                    placed = true;
                } else if (step_down) {
                    host->pattern = LinePattern::descending;
                    placed = true;
                }
            } else if (host->pattern == LinePattern::ascending ? step_up : step_down) {
                placed = true;
            }
            if (placed) host->symbols.push_back(x);
        }
        if (!placed) out.lines.push_back({{x}, LinePattern::undetermined});
    }
    return out;
}

inline Interval line_interval(int m, const AbacusLine& line) {
    if (line.symbols.empty()) throw InvalidParameter("empty abacus line");
    return make_interval(m, line.symbols.front(), line.symbols.back(),
                         line.pattern == LinePattern::descending ? IntervalDirection::descending
                                                                 : IntervalDirection::ascending);
}

// The rearranged expression u': all abacus lines read top to bottom.
inline Expression abacus_expression(const Abacus& ab) {
    Expression out;
    for (const auto& line : ab.lines)
        out.letters.insert(out.letters.end(), line.symbols.begin(), line.symbols.end());
    return out;
}

// T-matrix of the abacus rearrangement u', assembled purely from interval
// closed forms folded with bnabla. Equals t_matrix of u' exactly; it relates to
// t_matrix of u through a chain of commuting-swap isomorphisms, not entrywise.
inline TriMatrix assemble_t_matrix(int m, const Expression& u) {
    const Realization real = make_type_a_realization(m);
    ExtendedTriMatrix acc{{}, {}, TriMatrix()};
    for (const auto& line : abacus(m, u).lines)
        acc = bnabla(real, acc, interval_extended_matrix(m, line_interval(m, line)));
    return acc.t;
}

// Decides whether v is reachable from u by swapping adjacent letters whose
// residues are strictly more than 1 apart mod m: greedy front extraction, where
// each letter of v must be found in u behind commuting letters only.
inline bool verify_commuting_rearrangement(int m, const Expression& u, const Expression& v) {
    if (m < 2) throw InvalidParameter("rearrangement check needs at least 2 residues");
    for (int x : u.letters)
        if (x < 0 || x >= m) throw InvalidParameter("letter outside residues mod " + std::to_string(m));
    for (int x : v.letters)
        if (x < 0 || x >= m) throw InvalidParameter("letter outside residues mod " + std::to_string(m));
    if (u.letters.size() != v.letters.size()) return false;
    std::vector<int> rest = u.letters;
    std::vector<bool> used(rest.size(), false);
    for (const int c : v.letters) {
        bool found = false;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (used[i]) continue;
            if (rest[i] == c) {
                used[i] = true;
                found = true;
                break;
            }
            if (residues_adjacent_or_equal(m, rest[i], c)) break;
        }
        if (!found) return false;
    }
    return true;
}

namespace detail {

inline TriMatrix blob_formula(int m, int h) {
    const std::size_t n = static_cast<std::size_t>(m) * static_cast<std::size_t>(h);
    TriMatrix t(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < k; ++j)
            t.set(k, j, (k - j) % static_cast<std::size_t>(m - 1) == 0 ? Rational(-2) : Rational(-1));
    return t;
}

inline void blob_selftest() {
    for (const auto& [m, h] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2}}) {
        const Realization real = make_type_a_realization(m);
        Expression u;
        for (int rep = 0; rep < h; ++rep)
            for (int a = 0; a < m; ++a) u.letters.push_back(a);
        if (!(blob_formula(m, h) == t_matrix(real, u)))
            throw std::logic_error("dot-line matrix self-test failed for m=" + std::to_string(m));
    }
}

inline std::once_flag blob_selftest_flag;

} // namespace detail

// T-matrix of h stacked full cycles: entry (k, j) below the diagonal is -2 when
// k - j is a multiple of m - 1 and -1 otherwise, for any starting residue.
// The first call checks the formula against t_matrix on small cases.
inline TriMatrix blob_matrix(int m, int h) {
    if (m < 2) throw InvalidParameter("dot-line matrix needs at least 2 residues");
    if (h < 1) throw InvalidParameter("dot-line matrix needs at least one cycle");
    std::call_once(detail::blob_selftest_flag, detail::blob_selftest);
    return detail::blob_formula(m, h);
}

// Every t_matrix over a cyclic realization has entries in {0, 1, -1, -2}.
inline bool entries_in_range(const TriMatrix& t) {
    for (std::size_t k = 0; k < t.size(); ++k)
        for (std::size_t j = 0; j < k; ++j) {
            const Rational& v = t.at(k, j);
            if (v != 0 && v != 1 && v != -1 && v != -2) return false;
        }
    return true;
}

} // namespace nilcox
