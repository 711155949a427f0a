#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "nilalg.hpp"
#include "trimat.hpp"

namespace nilcox {

// Candidate morphism A(T) -> A(S) given by generator images: X_r maps to
// sum_j gamma[j][r] Y_{j+1}. gamma has one row per target generator and one
// column per source generator.
struct MorphismSpec {
    TriMatrix source;
    TriMatrix target;
    RatMatrix gamma;

    MorphismSpec(TriMatrix src, TriMatrix tgt, RatMatrix g)
        : source(std::move(src)), target(std::move(tgt)), gamma(std::move(g)) {
        if (gamma.size() != target.size())
            throw InvalidParameter("gamma must have one row per target generator");
        for (const auto& row : gamma)
            if (row.size() != source.size())
                throw InvalidParameter("gamma must have one column per source generator");
    }

    bool operator==(const MorphismSpec&) const = default;
};

namespace detail {
inline std::vector<AlgebraElement> generator_images(const MorphismSpec& f) {
    std::vector<AlgebraElement> images;
    images.reserve(f.source.size());
    for (std::size_t r = 0; r < f.source.size(); ++r) {
        AlgebraElement img = AlgebraElement::zero(f.target);
        for (std::size_t j = 0; j < f.target.size(); ++j)
            if (f.gamma[j][r] != 0)
                img = img + f.gamma[j][r] * AlgebraElement::generator(f.target, static_cast<int>(j) + 1);
        images.push_back(std::move(img));
    }
    return images;
}
} // namespace detail

// gamma defines a morphism iff every defining relation is preserved:
// image(X_r)^2 = sum_{j<r} t_rj image(X_j) image(X_r) inside A(S).
inline bool is_morphism(const MorphismSpec& f) {
    const auto images = detail::generator_images(f);
    for (std::size_t r = 0; r < images.size(); ++r) {
        AlgebraElement rhs = AlgebraElement::zero(f.target);
        for (std::size_t j = 0; j < r; ++j)
            if (f.source.at(r, j) != 0)
                rhs = rhs + f.source.at(r, j) * multiply(images[j], images[r]);
        if (!(multiply(images[r], images[r]) == rhs)) return false;
    }
    return true;
}

// A morphism between equal-size algebras is an isomorphism iff gamma is
// invertible, equivalently iff the product of all generator images is nonzero.
// Both criteria are evaluated and must agree.
inline bool is_isomorphism(const MorphismSpec& f) {
    if (!is_morphism(f)) return false;
    if (f.source.size() != f.target.size()) return false;
    const bool invertible = det(f.gamma) != 0;
    AlgebraElement prod = AlgebraElement::one(f.target);
    for (const auto& img : detail::generator_images(f)) prod = multiply(prod, img);
    const bool image_nonzero = !prod.is_zero();
    if (invertible != image_nonzero)
        throw std::logic_error("isomorphism criteria disagree; matrix data is corrupt");
    return invertible;
}

// Pushes x through the morphism. Verifies is_morphism unless the caller vouches.
inline AlgebraElement apply(const MorphismSpec& f, const AlgebraElement& x,
                            bool assume_verified = false) {
    if (!(x.ambient() == f.source))
        throw InvalidParameter("element ambient differs from the morphism source");
    if (!assume_verified && !is_morphism(f))
        throw InvalidParameter("matrix data does not define a morphism");
    const auto images = detail::generator_images(f);
    AlgebraElement out = AlgebraElement::zero(f.target);
    for (const auto& [s, c] : x.terms()) {
        AlgebraElement term = AlgebraElement::one(f.target);
        for (int i : subset_to_indices(s)) term = multiply(term, images[i - 1]);
        out = out + c * term;
    }
    return out;
}

// A(T) embeds into A(T nabla_C S) by X_i -> Z_i.
inline MorphismSpec natural_injection(const TriMatrix& t, const RatMatrix& c, const TriMatrix& s) {
    const TriMatrix big = nabla(t, c, s);
    RatMatrix gamma(big.size(), std::vector<Rational>(t.size(), Rational(0)));
    for (std::size_t i = 0; i < t.size(); ++i) gamma[i][i] = 1;
    return MorphismSpec(t, big, std::move(gamma));
}

// A(T nabla_C S) projects onto A(S) by Z_i -> 0 (i <= n), Z_{n+j} -> Y_j.
inline MorphismSpec natural_projection(const TriMatrix& t, const RatMatrix& c, const TriMatrix& s) {
    const TriMatrix big = nabla(t, c, s);
    RatMatrix gamma(s.size(), std::vector<Rational>(big.size(), Rational(0)));
    for (std::size_t j = 0; j < s.size(); ++j) gamma[j][t.size() + j] = 1;
    return MorphismSpec(big, s, std::move(gamma));
}

// Swaps the letters at 1-based positions p, p+1 of u. Allowed only when the two
// generators are orthogonal under the pairing (they commute and neither Demazure
// value sees the other root). Returns the new expression and the transposition
// morphism A(T_u) -> A(T_v), which is always an isomorphism.
inline std::pair<Expression, MorphismSpec> commuting_swap(const Realization& real,
                                                          const Expression& u, std::size_t p) {
    if (p < 1 || p >= u.letters.size())
        throw InvalidParameter("swap position " + std::to_string(p) +
                               " outside 1.." + std::to_string(u.letters.empty() ? 0 : u.letters.size() - 1));
    const int b = u.letters[p - 1], c = u.letters[p];
    if (b == c || real.pairing(b, c) != 0 || real.pairing(c, b) != 0)
        throw InvalidMove("letters s" + std::to_string(b) + " and s" + std::to_string(c) +
                          " do not commute");
    Expression v = u;
    std::swap(v.letters[p - 1], v.letters[p]);
    const std::size_t n = u.letters.size();
    RatMatrix gamma(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) gamma[i][i] = 1;
    gamma[p - 1][p - 1] = 0;
    gamma[p][p] = 0;
    gamma[p][p - 1] = 1;
    gamma[p - 1][p] = 1;
    return {v, MorphismSpec(t_matrix(real, u), t_matrix(real, v), std::move(gamma))};
}

} // namespace nilcox
