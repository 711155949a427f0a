#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace nilcox {

// Strictly lower triangular square rational matrix, the defining data of A(T).
// Rows and columns are 0-based here; generator X_i matches row/column i-1.
class TriMatrix {
public:
    TriMatrix() = default;

    explicit TriMatrix(std::size_t n) : entries_(n, std::vector<Rational>(n, Rational(0))) {}

    explicit TriMatrix(RatMatrix entries) : entries_(std::move(entries)) {
        const std::size_t n = entries_.size();
        for (const auto& row : entries_)
            if (row.size() != n) throw InvalidParameter("triangular matrix must be square");
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = k; j < n; ++j)
                if (entries_[k][j] != 0)
                    throw InvalidParameter("entry (" + std::to_string(k) + ", " +
                                           std::to_string(j) + ") above the diagonal is nonzero");
    }

    std::size_t size() const { return entries_.size(); }
    const RatMatrix& entries() const { return entries_; }

    const Rational& at(std::size_t k, std::size_t j) const { return entries_.at(k).at(j); }

    void set(std::size_t k, std::size_t j, const Rational& v) {
        if (j >= k || k >= size())
            throw InvalidParameter("only entries strictly below the diagonal may be set");
        entries_[k][j] = v;
    }

    bool operator==(const TriMatrix&) const = default;

private:
    RatMatrix entries_;
};

// Row k of T_w holds the Demazure values of suffix actions on the row's own root:
// entry (k, j) is partial_{a_j} (s_{a_{j+1}} ... s_{a_{k-1}}) (alpha_{a_k}).
inline TriMatrix t_matrix(const Realization& real, const Expression& w) {
    const std::size_t n = w.letters.size();
    for (int a : w.letters) real.position(a);
    TriMatrix t(n);
    for (std::size_t k = 1; k < n; ++k) {
        RootVector h = real.simple_root(w.letters[k]);
        for (std::size_t j = k; j-- > 0;) {
            t.set(k, j, demazure(real, w.letters[j], h));
            h = act_generator(real, w.letters[j], h);
        }
    }
    return t;
}

// Column of acted roots: entry k is (s_{b_1} ... s_{b_{k-1}}) (alpha_{b_k}).
inline std::vector<RootVector> q_column(const Realization& real, const Expression& w) {
    std::vector<RootVector> q;
    q.reserve(w.letters.size());
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        RootVector v = real.simple_root(w.letters[k]);
        for (std::size_t j = k; j-- > 0;) v = act_generator(real, w.letters[j], v);
        q.push_back(std::move(v));
    }
    return q;
}

// T_w bundled with its source expression and Q column.
struct ExtendedTriMatrix {
    Expression source;
    std::vector<RootVector> q;
    TriMatrix t;

    bool operator==(const ExtendedTriMatrix&) const = default;
};

inline ExtendedTriMatrix extended_t_matrix(const Realization& real, const Expression& w) {
    return {w, q_column(real, w), t_matrix(real, w)};
}

// Equality where the Q entries are compared modulo the radical.
inline bool equal_mod_radical(const Realization& real, const ExtendedTriMatrix& x,
                              const ExtendedTriMatrix& y) {
    if (x.source != y.source || !(x.t == y.t) || x.q.size() != y.q.size()) return false;
    for (std::size_t k = 0; k < x.q.size(); ++k)
        if (!real.equal(x.q[k], y.q[k])) return false;
    return true;
}

// Block assembly [[T, 0], [C, S]]; C must be (size of S) x (size of T).
inline TriMatrix nabla(const TriMatrix& t, const RatMatrix& c, const TriMatrix& s) {
    const std::size_t n = t.size(), m = s.size();
    if (c.size() != m) throw InvalidParameter("connecting block must have one row per row of S");
    for (const auto& row : c)
        if (row.size() != n)
            throw InvalidParameter("connecting block must have one column per column of T");
    TriMatrix out(n + m);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < k; ++j) out.set(k, j, t.at(k, j));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < n; ++j)
            if (c[k][j] != 0) out.set(n + k, j, c[k][j]);
        for (std::size_t j = 0; j < k; ++j) out.set(n + k, n + j, s.at(k, j));
    }
    return out;
}

namespace detail {
inline void check_extended(const Realization& real, const ExtendedTriMatrix& e) {
    if (e.q.size() != e.source.letters.size() || e.t.size() != e.source.letters.size())
        throw InvalidParameter("extended matrix fields disagree with its source length");
    for (int a : e.source.letters) real.position(a); // rejects letters from another realization
}
} // namespace detail

// Product of extended matrices over one realization: the result covers the
// concatenated source, stacks [Q_u ; u(Q_w)], and carries T_u nabla_C T_w where
// row k of C is the generalized Demazure row of u at Q_w entry k.
inline ExtendedTriMatrix bnabla(const Realization& real, const ExtendedTriMatrix& x,
                                const ExtendedTriMatrix& y) {
    detail::check_extended(real, x);
    detail::check_extended(real, y);
    RatMatrix c;
    c.reserve(y.q.size());
    for (const auto& qk : y.q) c.push_back(generalized_demazure_row(real, x.source, qk));
    ExtendedTriMatrix out;
    out.source = concat(x.source, y.source);
    out.q = x.q;
    out.q.reserve(out.source.letters.size());
    for (const auto& qk : y.q) out.q.push_back(act_expression(real, x.source, qk));
    out.t = nabla(x.t, c, y.t);
    return out;
}

} // namespace nilcox
