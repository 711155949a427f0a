#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "morphism.hpp"
#include "nilalg.hpp"
#include "parse.hpp"
#include "serialize.hpp"
#include "trimat.hpp"
#include "typeatilde.hpp"

namespace nilcox {

struct SelftestResult {
    std::string name;
    bool passed;
    std::string detail;
};

namespace detail {

inline TriMatrix tri_from_ints(const std::vector<std::vector<int>>& rows) {
    RatMatrix m;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (int v : row) r.push_back(Rational(v));
        m.push_back(std::move(r));
    }
    return TriMatrix(std::move(m));
}

} // namespace detail

// Built-in example suite: frozen worked examples plus the small exhaustive
// checks that every install is expected to pass.
inline std::vector<SelftestResult> run_selftest() {
    std::vector<SelftestResult> results;
    const auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        results.push_back({name, ok, detail});
    };

    // Six-letter word over five residues: the matrix, its extended assembly
    // from two interval factors, and the rendered relation list.
    {
        const Realization real = make_type_a_realization(5);
        const Expression u = parse_expression("s0 s1 s2 s3 s2 s1", real);
        const TriMatrix expected = detail::tri_from_ints({{0, 0, 0, 0, 0, 0},
                                                          {-1, 0, 0, 0, 0, 0},
                                                          {-1, -1, 0, 0, 0, 0},
                                                          {-1, -1, -1, 0, 0, 0},
                                                          {0, 0, 1, -1, 0, 0},
                                                          {0, 1, 0, -1, -1, 0}});
        const TriMatrix t = t_matrix(real, u);
        check("six-letter word matrix", t == expected);

        const ExtendedTriMatrix left =
            interval_extended_matrix(5, make_interval(5, 0, 3, IntervalDirection::ascending));
        const ExtendedTriMatrix right =
            interval_extended_matrix(5, make_interval(5, 2, 1, IntervalDirection::descending));
        const ExtendedTriMatrix prod = bnabla(real, left, right);
        check("interval product assembly", equal_mod_radical(real, prod, extended_t_matrix(real, u)));

        RootVector a3 = RootVector::unit(3);
        RootVector a23 = RootVector::unit(2) + RootVector::unit(3);
        check("acted column tail", prod.q[4] == a3 && prod.q[5] == a23);

        const auto lines = relation_lines(t, "J");
        check("relation list tail",
              lines.size() == 6 && lines.back() == "J_6^2 = J_2 J_6 - J_4 J_6 - J_5 J_6",
              lines.empty() ? "" : lines.back());
    }

    // Thirteen-letter placement over ten residues.
    {
        const Expression u = parse_expression("s3 s1 s0 s4 s2 s8 s7 s5 s6 s2 s5 s1 s0", 10);
        const Abacus ab = abacus(10, u);
        const Abacus expected{{{{3, 4, 5}, LinePattern::ascending},
                               {{1, 0}, LinePattern::descending},
                               {{2}, LinePattern::undetermined},
                               {{8, 7, 6, 5}, LinePattern::descending},
                               {{2, 1, 0}, LinePattern::descending}}};
        check("abacus placement", ab == expected);
        check("abacus rearrangement reachable",
              verify_commuting_rearrangement(10, u, abacus_expression(ab)));
        check("abacus assembly", assemble_t_matrix(10, u) ==
                                     t_matrix(make_type_a_realization(10), abacus_expression(ab)));
    }

    // Interval closed forms against the defining computation.
    {
        bool ok = true;
        for (int m = 2; m <= 5 && ok; ++m) {
            const Realization real = make_type_a_realization(m);
            for (int a = 0; a < m && ok; ++a)
                for (int b = 0; b < m && ok; ++b)
                    for (const auto dir : {IntervalDirection::ascending, IntervalDirection::descending}) {
                        const Interval iv = make_interval(m, a, b, dir);
                        const ExtendedTriMatrix closed = interval_extended_matrix(m, iv);
                        const ExtendedTriMatrix generic =
                            extended_t_matrix(real, interval_expression(m, iv));
                        if (!equal_mod_radical(real, closed, generic)) ok = false;
                    }
        }
        check("interval closed forms", ok);
    }

    // Dot-line matrices for stacked full cycles, every starting residue.
    {
        bool ok = true;
        std::string detail;
        for (int m = 2; m <= 5 && ok; ++m) {
            const Realization real = make_type_a_realization(m);
            for (int h = 1; h <= 3 && ok; ++h) {
                const TriMatrix blob = blob_matrix(m, h);
                if (!entries_in_range(blob)) ok = false;
                for (int a = 0; a < m && ok; ++a) {
                    Expression u;
                    for (int rep = 0; rep < h; ++rep)
                        for (int k = 0; k < m; ++k) u.letters.push_back(mod_residue(a + k, m));
                    if (!(blob == t_matrix(real, u))) {
                        ok = false;
                        detail = "mismatch at m=" + std::to_string(m) + " h=" + std::to_string(h) +
                                 " a=" + std::to_string(a);
                    }
                }
            }
        }
        check("dot-line matrices", ok, detail);
    }

    // Four-generator isomorphism example.
    {
        const TriMatrix t = detail::tri_from_ints(
            {{0, 0, 0, 0}, {0, 0, 0, 0}, {-1, -1, 0, 0}, {-1, 1, -1, 0}});
        const TriMatrix s = detail::tri_from_ints(
            {{0, 0, 0, 0}, {-1, 0, 0, 0}, {-1, -1, 0, 0}, {0, 1, -1, 0}});
        RatMatrix gamma{{Rational(1), Rational(1), Rational(0), Rational(0)},
                        {Rational(0), Rational(2), Rational(0), Rational(0)},
                        {Rational(0), Rational(0), Rational(2), Rational(0)},
                        {Rational(0), Rational(0), Rational(0), Rational(2)}};
        const MorphismSpec f(t, s, gamma);
        check("isomorphism example", is_morphism(f) && is_isomorphism(f) && det(f.gamma) == 8);
        const AlgebraElement image = apply(f, full_product(t), true);
        check("isomorphism top image",
              image == Rational(8) * full_product(s));
        const AlgebraElement x3sq = generator_power(t, 3, 2);
        const AlgebraElement expect =
            Rational(-1) * multiply(AlgebraElement::generator(t, 1), AlgebraElement::generator(t, 3)) +
            Rational(-1) * multiply(AlgebraElement::generator(t, 2), AlgebraElement::generator(t, 3));
        check("square rewrites", generator_power(t, 1, 2).is_zero() && x3sq == expect);
    }

    // Block assembly example.
    {
        const TriMatrix t = detail::tri_from_ints(
            {{0, 0, 0, 0}, {-1, 0, 0, 0}, {-1, -1, 0, 0}, {-1, -1, -1, 0}});
        const TriMatrix s = detail::tri_from_ints({{0, 0}, {2, 0}});
        const RatMatrix c{{Rational(1), Rational(2), Rational(0), Rational(0)},
                          {Rational(0), Rational(0), Rational(1), Rational(-1)}};
        const TriMatrix expected = detail::tri_from_ints({{0, 0, 0, 0, 0, 0},
                                                          {-1, 0, 0, 0, 0, 0},
                                                          {-1, -1, 0, 0, 0, 0},
                                                          {-1, -1, -1, 0, 0, 0},
                                                          {1, 2, 0, 0, 0, 0},
                                                          {0, 0, 1, -1, 2, 0}});
        check("block assembly", nabla(t, c, s) == expected);
        check("natural injection and projection",
              is_morphism(natural_injection(t, c, s)) && is_morphism(natural_projection(t, c, s)));
    }

    return results;
}

} // namespace nilcox
