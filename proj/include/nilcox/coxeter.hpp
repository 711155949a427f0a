#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace nilcox {

// A word in the generators; letters are generator labels, leftmost letter first.
struct Expression {
    std::vector<int> letters;

    bool operator==(const Expression&) const = default;
    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
};

inline Expression concat(const Expression& u, const Expression& w) {
    Expression out = u;
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    return out;
}

// Finitely supported rational coordinates over generator labels.
// Zero coefficients are pruned, so coefficientwise equality is canonical;
// equality modulo the radical lives on Realization.
class RootVector {
public:
    RootVector() = default;

    static RootVector unit(int label) {
        RootVector v;
        v.coeffs_[label] = 1;
        return v;
    }

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int label) const {
        auto it = coeffs_.find(label);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set(int label, const Rational& c) {
        if (c == 0)
            coeffs_.erase(label);
        else
            coeffs_[label] = c;
    }

    RootVector& operator+=(const RootVector& o) {
        for (const auto& [lab, c] : o.coeffs_) set(lab, coeff(lab) + c);
        return *this;
    }
    RootVector& operator-=(const RootVector& o) {
        for (const auto& [lab, c] : o.coeffs_) set(lab, coeff(lab) - c);
        return *this;
    }
    RootVector& operator*=(const Rational& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [lab, x] : coeffs_) x *= c;
        return *this;
    }

    friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
    friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
    friend RootVector operator*(const Rational& c, RootVector v) { return v *= c; }
    RootVector operator-() const {
        RootVector out = *this;
        for (auto& [lab, x] : out.coeffs_) x = -x;
        return out;
    }

    bool operator==(const RootVector&) const = default;

private:
    std::map<int, Rational> coeffs_;
};

// Coxeter data over an ordered label list: a symmetric order table with 1 on the
// diagonal and entries >= 2 off it. infinite_order stands for m(a,b) = infinity.
class CoxeterSystem {
public:
    static constexpr int infinite_order = std::numeric_limits<int>::max();

    CoxeterSystem(std::vector<int> index_set, std::vector<std::vector<int>> orders)
        : index_set_(std::move(index_set)), orders_(std::move(orders)) {
        const std::size_t n = index_set_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (!pos_.emplace(index_set_[i], i).second)
                throw InvalidParameter("duplicate generator label " + std::to_string(index_set_[i]));
        }
        if (orders_.size() != n) throw InvalidParameter("order table size differs from index set");
        for (const auto& row : orders_)
            if (row.size() != n) throw InvalidParameter("order table is not square");
        for (std::size_t i = 0; i < n; ++i) {
            if (orders_[i][i] != 1) throw InvalidParameter("order table diagonal must be 1");
            for (std::size_t j = i + 1; j < n; ++j) {
                if (orders_[i][j] != orders_[j][i])
                    throw InvalidParameter("order table must be symmetric");
                if (orders_[i][j] < 2)
                    throw InvalidParameter("off-diagonal orders must be at least 2");
            }
        }
    }

    const std::vector<int>& index_set() const { return index_set_; }
    std::size_t size() const { return index_set_.size(); }

    std::size_t position(int label) const {
        auto it = pos_.find(label);
        if (it == pos_.end())
            throw InvalidParameter("label " + std::to_string(label) + " is not in the index set");
        return it->second;
    }

    int order(int a, int b) const { return orders_[position(a)][position(b)]; }

    bool operator==(const CoxeterSystem& o) const {
        return index_set_ == o.index_set_ && orders_ == o.orders_;
    }

private:
    std::vector<int> index_set_;
    std::map<int, std::size_t> pos_;
    std::vector<std::vector<int>> orders_;
};

// Realization of a Coxeter system through its pairing matrix
// P[a][b] = <alpha_b, alpha_a^vee>, plus a list of radical vectors.
// Every action and Demazure value is computed from P, never from case tables.
class Realization {
public:
    Realization(CoxeterSystem system, RatMatrix pairing, std::vector<RootVector> radical)
        : system_(std::move(system)), pairing_(std::move(pairing)), radical_(std::move(radical)) {
        const std::size_t n = system_.size();
        if (pairing_.size() != n) throw InvalidParameter("pairing size differs from index set");
        for (const auto& row : pairing_)
            if (row.size() != n) throw InvalidParameter("pairing matrix is not square");
        for (std::size_t i = 0; i < n; ++i)
            if (pairing_[i][i] != 2)
                throw InvalidParameter("pairing diagonal must equal 2 (position " +
                                       std::to_string(i) + ")");
        // The radical must be generator stable: every Demazure value vanishes there.
        for (const auto& r : radical_) {
            const auto d = dense(r);
            for (std::size_t a = 0; a < n; ++a) {
                Rational val(0);
                for (std::size_t b = 0; b < n; ++b) val += pairing_[a][b] * d[b];
                if (val != 0)
                    throw InvalidParameter("radical vector is not stable under generator " +
                                           std::to_string(system_.index_set()[a]));
            }
            radical_rref_.push_back(d);
        }
        radical_pivots_ = rref(radical_rref_);
    }

    const CoxeterSystem& system() const { return system_; }
    const std::vector<int>& index_set() const { return system_.index_set(); }
    std::size_t size() const { return system_.size(); }
    const RatMatrix& pairing_matrix() const { return pairing_; }
    const std::vector<RootVector>& radical() const { return radical_; }

    std::size_t position(int label) const { return system_.position(label); }
    int label_at(std::size_t pos) const { return system_.index_set().at(pos); }

    Rational pairing(int a, int b) const { return pairing_[position(a)][position(b)]; }

    RootVector simple_root(int label) const {
        position(label); // validates
        return RootVector::unit(label);
    }

    std::vector<Rational> dense(const RootVector& v) const {
        std::vector<Rational> out(size(), Rational(0));
        for (const auto& [lab, c] : v.coeffs()) out[position(lab)] = c;
        return out;
    }

    RootVector sparse(const std::vector<Rational>& d) const {
        if (d.size() != size()) throw InvalidParameter("dense vector length differs from index set");
        RootVector v;
        for (std::size_t i = 0; i < d.size(); ++i) v.set(label_at(i), d[i]);
        return v;
    }

    // Canonical representative of v modulo the span of the radical.
    RootVector reduce(const RootVector& v) const {
        auto d = dense(v);
        reduce_against_rref(radical_rref_, radical_pivots_, d);
        return sparse(d);
    }

    // Equality modulo the span of the radical.
    bool equal(const RootVector& v, const RootVector& w) const {
        auto d = dense(v - w);
        reduce_against_rref(radical_rref_, radical_pivots_, d);
        for (const auto& x : d)
            if (x != 0) return false;
        return true;
    }

private:
    CoxeterSystem system_;
    RatMatrix pairing_;
    std::vector<RootVector> radical_;
    RatMatrix radical_rref_;
    std::vector<std::size_t> radical_pivots_;
};

// partial_a(v) = <v, alpha_a^vee>, extended linearly from the pairing rows.
inline Rational demazure(const Realization& real, int a, const RootVector& v) {
    Rational out(0);
    for (const auto& [b, c] : v.coeffs()) out += c * real.pairing(a, b);
    return out;
}

// s_a(v) = v - partial_a(v) alpha_a.
inline RootVector act_generator(const Realization& real, int a, const RootVector& v) {
    RootVector out = v;
    const Rational d = demazure(real, a, v);
    if (d != 0) out -= d * real.simple_root(a);
    return out;
}

// Rightmost letter acts first: (s_{a_1} ... s_{a_p})(v) folds from a_p up to a_1.
inline RootVector act_expression(const Realization& real, const Expression& w, RootVector v) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        v = act_generator(real, *it, v);
    return v;
}

// Entry k is partial_{a_k} applied to the suffix action s_{a_{k+1}} ... s_{a_p} (f).
inline std::vector<Rational> generalized_demazure_row(const Realization& real, const Expression& w,
                                                      const RootVector& f) {
    std::vector<Rational> row(w.letters.size());
    RootVector h = f;
    for (std::size_t k = w.letters.size(); k-- > 0;) {
        row[k] = demazure(real, w.letters[k], h);
        h = act_generator(real, w.letters[k], h);
    }
    return row;
}

// Cyclic realization on residues 0..m-1: adjacent residues pair to -1 (to -2 when
// m = 2, where the two generators are joined by an infinite bond), others to 0.
// The radical is spanned by the sum of all simple roots.
inline Realization make_type_a_realization(int m) {
    if (m < 2) throw InvalidParameter("cyclic realization needs at least 2 generators");
    std::vector<int> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = i;
    std::vector<std::vector<int>> orders(m, std::vector<int>(m, 2));
    RatMatrix pairing(m, std::vector<Rational>(m, Rational(0)));
    for (int a = 0; a < m; ++a) {
        orders[a][a] = 1;
        pairing[a][a] = 2;
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            const bool adjacent = ((b - a) % m + m) % m == 1 || ((a - b) % m + m) % m == 1;
            if (!adjacent) continue;
            orders[a][b] = m == 2 ? CoxeterSystem::infinite_order : 3;
            pairing[a][b] = m == 2 ? Rational(-2) : Rational(-1);
        }
    }
    RootVector radical;
    for (int i = 0; i < m; ++i) radical.set(i, Rational(1));
    return Realization(CoxeterSystem(std::move(labels), std::move(orders)), std::move(pairing),
                       {radical});
}

} // namespace nilcox
