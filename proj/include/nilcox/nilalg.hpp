#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "trimat.hpp"

namespace nilcox {

// Bit i set means generator X_{i+1} is present in the square-free monomial.
using GeneratorSubset = std::uint32_t;

inline GeneratorSubset full_subset(std::size_t n) {
    return n == 0 ? 0u : (n == 32 ? ~0u : ((1u << n) - 1u));
}

inline std::vector<int> subset_to_indices(GeneratorSubset s) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (s & (1u << i)) out.push_back(i + 1);
    return out;
}

inline GeneratorSubset indices_to_subset(std::size_t n, const std::vector<int>& indices) {
    GeneratorSubset s = 0;
    for (int i : indices) {
        if (i < 1 || static_cast<std::size_t>(i) > n)
            throw InvalidParameter("generator index " + std::to_string(i) +
                                   " outside 1.." + std::to_string(n));
        const GeneratorSubset bit = 1u << (i - 1);
        if (s & bit) throw InvalidParameter("repeated generator index " + std::to_string(i));
        s |= bit;
    }
    return s;
}

// An exponent vector with a scalar: coeff * X_1^{e_0} X_2^{e_1} ...
struct ExponentMonomial {
    std::vector<unsigned> exponents;
    Rational coeff{1};
};

enum class ReductionPivot { leftmost, rightmost };

namespace detail {

// Exponent vectors packed 4 bits per generator, X_1 in the highest nibble, so
// every rewrite (add at a lower index, remove at a higher one) raises the key.
using PackedExponents = unsigned __int128;

inline constexpr unsigned packed_shift(std::size_t i) {
    return static_cast<unsigned>(4 * (31 - i));
}

inline unsigned packed_get(PackedExponents key, std::size_t i) {
    return static_cast<unsigned>((key >> packed_shift(i)) & 0xF);
}

inline PackedExponents pack_exponents(const std::vector<unsigned>& exps) {
    PackedExponents key = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > 15)
            throw ResourceError("exponent " + std::to_string(exps[i]) +
                                " exceeds the packed width (15)");
        key |= static_cast<PackedExponents>(exps[i]) << packed_shift(i);
    }
    return key;
}

// Core rewriting loop: X_i^2 -> sum_{j<i} t_ij X_j X_i applied at the chosen
// violating index until every state is square-free. States pop in increasing
// packed order; children are strictly larger, so each state pops exactly once
// with its full accumulated coefficient.
inline std::map<GeneratorSubset, Rational> reduce_packed(const TriMatrix& t, PackedExponents start,
                                                         const Rational& coeff,
                                                         ReductionPivot pivot) {
    const std::size_t n = t.size();
    std::map<GeneratorSubset, Rational> out;
    if (coeff == 0) return out;
    std::map<PackedExponents, Rational> active;
    active.emplace(start, coeff);
    while (!active.empty()) {
        auto node = active.extract(active.begin());
        const PackedExponents key = node.key();
        const Rational c = std::move(node.mapped());
        if (c == 0) continue;
        std::size_t piv = n;
        if (pivot == ReductionPivot::leftmost) {
            for (std::size_t i = 0; i < n; ++i)
                if (packed_get(key, i) >= 2) {
                    piv = i;
                    break;
                }
        } else {
            for (std::size_t i = n; i-- > 0;)
                if (packed_get(key, i) >= 2) {
                    piv = i;
                    break;
                }
        }
        if (piv == n) {
            GeneratorSubset mask = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (packed_get(key, i)) mask |= 1u << i;
            auto [it, inserted] = out.emplace(mask, c);
            if (!inserted) it->second += c;
            continue;
        }
        for (std::size_t j = 0; j < piv; ++j) {
            const Rational& tij = t.at(piv, j);
            if (tij == 0) continue;
            if (packed_get(key, j) == 15)
                throw ResourceError("exponent overflow during reduction");
            const PackedExponents child = key + (static_cast<PackedExponents>(1) << packed_shift(j)) -
                                          (static_cast<PackedExponents>(1) << packed_shift(piv));
            auto [it, inserted] = active.emplace(child, c * tij);
            if (!inserted) it->second += c * tij;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace detail

// Element of A(T) in the square-free basis. Immutable ambient data is shared, so
// copies are cheap; two elements are comparable when their matrices are equal.
class AlgebraElement {
public:
    static AlgebraElement zero(const TriMatrix& t) { return AlgebraElement(t, {}); }

    static AlgebraElement one(const TriMatrix& t) {
        return AlgebraElement(t, {{GeneratorSubset{0}, Rational(1)}});
    }

    // X_i with the 1-based index used throughout.
    static AlgebraElement generator(const TriMatrix& t, int i) {
        return basis(t, indices_to_subset(t.size(), {i}));
    }

    static AlgebraElement basis(const TriMatrix& t, GeneratorSubset s) {
        if (t.size() < 32 && (s >> t.size()) != 0)
            throw InvalidParameter("subset mentions generators outside the ambient matrix");
        return AlgebraElement(t, {{s, Rational(1)}});
    }

    static AlgebraElement from_terms(const TriMatrix& t,
                                     std::map<GeneratorSubset, Rational> terms) {
        for (auto it = terms.begin(); it != terms.end();) {
            if (t.size() < 32 && (it->first >> t.size()) != 0)
                throw InvalidParameter("subset mentions generators outside the ambient matrix");
            it = it->second == 0 ? terms.erase(it) : std::next(it);
        }
        return AlgebraElement(t, std::move(terms));
    }

    const TriMatrix& ambient() const { return *ambient_; }
    std::shared_ptr<const TriMatrix> ambient_ptr() const { return ambient_; }
    const std::map<GeneratorSubset, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const AlgebraElement& o) const {
        return *ambient_ == *o.ambient_ && terms_ == o.terms_;
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        require_same_ambient(o);
        auto terms = terms_;
        for (const auto& [s, c] : o.terms_) {
            auto [it, inserted] = terms.emplace(s, c);
            if (!inserted && (it->second += c) == 0) terms.erase(it);
        }
        return AlgebraElement(ambient_, std::move(terms));
    }

    AlgebraElement operator-(const AlgebraElement& o) const { return *this + (Rational(-1) * o); }

    friend AlgebraElement operator*(const Rational& c, const AlgebraElement& x) {
        if (c == 0) return AlgebraElement(x.ambient_, {});
        auto terms = x.terms_;
        for (auto& [s, v] : terms) v *= c;
        return AlgebraElement(x.ambient_, std::move(terms));
    }

    void require_same_ambient(const AlgebraElement& o) const {
        if (ambient_ != o.ambient_ && !(*ambient_ == *o.ambient_))
            throw InvalidParameter("elements live over different ambient matrices");
    }

    friend AlgebraElement multiply(const AlgebraElement&, const AlgebraElement&);

private:
    AlgebraElement(const TriMatrix& t, std::map<GeneratorSubset, Rational> terms)
        : ambient_(std::make_shared<TriMatrix>(t)), terms_(std::move(terms)) {
        check_generator_count(ambient_->size());
    }

    AlgebraElement(std::shared_ptr<const TriMatrix> t, std::map<GeneratorSubset, Rational> terms)
        : ambient_(std::move(t)), terms_(std::move(terms)) {}

    std::shared_ptr<const TriMatrix> ambient_;
    std::map<GeneratorSubset, Rational> terms_;
};

// Image of a coefficient-carrying exponent monomial in the square-free basis.
inline AlgebraElement reduce_monomial(const TriMatrix& t, const ExponentMonomial& m,
                                      ReductionPivot pivot = ReductionPivot::leftmost) {
    check_generator_count(t.size());
    if (m.exponents.size() != t.size())
        throw InvalidParameter("exponent vector length differs from the ambient size");
    auto terms = detail::reduce_packed(t, detail::pack_exponents(m.exponents), m.coeff, pivot);
    return AlgebraElement::from_terms(t, std::move(terms));
}

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    x.require_same_ambient(y);
    const TriMatrix& t = x.ambient();
    const std::size_t n = t.size();
    std::map<GeneratorSubset, Rational> result;
    for (const auto& [s1, c1] : x.terms()) {
        for (const auto& [s2, c2] : y.terms()) {
            const Rational c = c1 * c2;
            if ((s1 & s2) == 0) {
                auto [it, inserted] = result.emplace(s1 | s2, c);
                if (!inserted) it->second += c;
                continue;
            }
            detail::PackedExponents key = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const unsigned e = ((s1 >> i) & 1u) + ((s2 >> i) & 1u);
                key |= static_cast<detail::PackedExponents>(e) << detail::packed_shift(i);
            }
            for (const auto& [s, v] : detail::reduce_packed(t, key, c, ReductionPivot::leftmost)) {
                auto [it, inserted] = result.emplace(s, v);
                if (!inserted) it->second += v;
            }
        }
    }
    for (auto it = result.begin(); it != result.end();)
        it = it->second == 0 ? result.erase(it) : std::next(it);
    return AlgebraElement::from_terms(t, std::move(result));
}

// X_i^k computed honestly as k successive multiplications; exact for every k,
// including powers past the nilpotency index (which collapse to zero).
inline AlgebraElement generator_power(const TriMatrix& t, int i, unsigned k) {
    AlgebraElement acc = AlgebraElement::one(t);
    const AlgebraElement xi = AlgebraElement::generator(t, i);
    for (unsigned s = 0; s < k && !acc.is_zero(); ++s) acc = multiply(acc, xi);
    return acc;
}

// The top basis element X_1 X_2 ... X_n.
inline AlgebraElement full_product(const TriMatrix& t) {
    return AlgebraElement::basis(t, full_subset(t.size()));
}

inline std::uint64_t dimension(const TriMatrix& t) {
    check_generator_count(t.size());
    return t.size() == 0 ? 1u : (std::uint64_t{1} << t.size());
}

// 2 |J| when every term shares the subset size |J| (0 for the zero element);
// nullopt when the element is inhomogeneous.
inline std::optional<int> degree(const AlgebraElement& x) {
    if (x.is_zero()) return 0;
    const int count = std::popcount(x.terms().begin()->first);
    for (const auto& [s, c] : x.terms())
        if (std::popcount(s) != count) return std::nullopt;
    return 2 * count;
}

} // namespace nilcox
