#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace nilcox {

using RatMatrix = std::vector<std::vector<Rational>>;

inline void check_rectangular(const RatMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.front().size())
            throw InvalidParameter("matrix rows have unequal lengths");
}

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    check_rectangular(m);
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        const Rational lead = m[r][c];
        for (auto& x : m[r]) x /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

inline std::size_t rank(RatMatrix m) { return rref(m).size(); }

inline Rational det(RatMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidParameter("determinant of a non-square matrix");
    Rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return Rational(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

// Reduces v against rows already in reduced echelon form with the given pivots;
// afterwards v is the canonical representative of its class modulo the row span.
inline void reduce_against_rref(const RatMatrix& basis, const std::vector<std::size_t>& pivots,
                                std::vector<Rational>& v) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const std::size_t c = pivots[i];
        if (c >= v.size() || v[c] == 0) continue;
        const Rational f = v[c];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[i][j];
    }
}

} // namespace nilcox
