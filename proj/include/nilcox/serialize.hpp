#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxeter.hpp"
#include "errors.hpp"
#include "morphism.hpp"
#include "nilalg.hpp"
#include "rational.hpp"
#include "trimat.hpp"
#include "typeatilde.hpp"

namespace nilcox {

using nlohmann::json;

// Rationals travel as strings "p" or "p/q", never as floats. Plain JSON
// integers are accepted on ingestion for convenience.
inline json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InvalidParameter("rational values must be strings like \"p/q\" (or integers)");
}

inline json rat_matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rational_to_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline RatMatrix rat_matrix_from_json(const json& j) {
    if (!j.is_array()) throw InvalidParameter("matrix entries must be an array of arrays");
    RatMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw InvalidParameter("matrix entries must be an array of arrays");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from_json(v));
        m.push_back(std::move(r));
    }
    return m;
}

inline json matrix_to_json(const TriMatrix& t) {
    return json{{"n", t.size()}, {"entries", rat_matrix_to_json(t.entries())}};
}

inline TriMatrix matrix_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("entries"))
        throw InvalidParameter("triangular matrix JSON needs fields n and entries");
    RatMatrix entries = rat_matrix_from_json(j.at("entries"));
    if (entries.size() != j.at("n").get<std::size_t>())
        throw InvalidParameter("field n disagrees with the number of entry rows");
    return TriMatrix(std::move(entries)); // the constructor enforces triangularity
}

inline json extended_to_json(const ExtendedTriMatrix& e, const Realization& real) {
    json q = json::array();
    for (const auto& v : e.q) {
        json row = json::array();
        for (const auto& c : real.dense(v)) row.push_back(rational_to_json(c));
        q.push_back(std::move(row));
    }
    json out = matrix_to_json(e.t);
    out["source"] = e.source.letters;
    out["q"] = std::move(q);
    return out;
}

inline ExtendedTriMatrix extended_from_json(const json& j, const Realization& real) {
    if (!j.contains("source") || !j.contains("q"))
        throw InvalidParameter("extended matrix JSON needs fields source and q");
    ExtendedTriMatrix e;
    e.t = matrix_from_json(j);
    e.source.letters = j.at("source").get<std::vector<int>>();
    for (const auto& row : j.at("q")) {
        std::vector<Rational> dense;
        for (const auto& v : row) dense.push_back(rational_from_json(v));
        e.q.push_back(real.sparse(dense));
    }
    if (e.q.size() != e.t.size() || e.source.letters.size() != e.t.size())
        throw InvalidParameter("extended matrix fields have inconsistent sizes");
    return e;
}

inline json element_to_json(const AlgebraElement& x) {
    json terms = json::array();
    for (const auto& [s, c] : x.terms())
        terms.push_back(json{{"subset", subset_to_indices(s)}, {"coeff", rational_to_json(c)}});
    return json{{"n", x.ambient().size()}, {"terms", std::move(terms)}};
}

inline AlgebraElement element_from_json(const json& j, const TriMatrix& ambient) {
    if (!j.contains("n") || !j.contains("terms"))
        throw InvalidParameter("algebra element JSON needs fields n and terms");
    if (j.at("n").get<std::size_t>() != ambient.size())
        throw InvalidParameter("element size " + j.at("n").dump() +
                               " differs from the ambient matrix size " +
                               std::to_string(ambient.size()));
    std::map<GeneratorSubset, Rational> terms;
    for (const auto& term : j.at("terms")) {
        const auto subset =
            indices_to_subset(ambient.size(), term.at("subset").get<std::vector<int>>());
        const Rational c = rational_from_json(term.at("coeff"));
        auto [it, inserted] = terms.emplace(subset, c);
        if (!inserted) it->second += c;
    }
    return AlgebraElement::from_terms(ambient, std::move(terms));
}

inline json morphism_to_json(const MorphismSpec& f) {
    return json{{"gamma", rat_matrix_to_json(f.gamma)},
                {"source", matrix_to_json(f.source)},
                {"target", matrix_to_json(f.target)}};
}

inline MorphismSpec morphism_from_json(const json& j) {
    if (!j.contains("gamma") || !j.contains("source") || !j.contains("target"))
        throw InvalidParameter("morphism JSON needs fields gamma, source and target");
    return MorphismSpec(matrix_from_json(j.at("source")), matrix_from_json(j.at("target")),
                        rat_matrix_from_json(j.at("gamma")));
}

inline json realization_to_json(const Realization& real) {
    json radical = json::array();
    for (const auto& r : real.radical()) {
        json row = json::array();
        for (const auto& c : real.dense(r)) row.push_back(rational_to_json(c));
        radical.push_back(std::move(row));
    }
    return json{{"index_set", real.index_set()},
                {"pairing", rat_matrix_to_json(real.pairing_matrix())},
                {"radical", std::move(radical)}};
}

namespace detail {
// The bond order is display metadata recovered from the pairing products
// 4 cos^2(pi/m): 0, 1, 2, 3 give the finite orders 2, 3, 4, 6; anything else
// is treated as an infinite bond.
inline int inferred_order(const Rational& product) {
    if (product == 0) return 2;
    if (product == 1) return 3;
    if (product == 2) return 4;
    if (product == 3) return 6;
    return CoxeterSystem::infinite_order;
}
} // namespace detail

inline Realization realization_from_json(const json& j) {
    if (!j.contains("index_set") || !j.contains("pairing") || !j.contains("radical"))
        throw InvalidParameter("realization JSON needs fields index_set, pairing and radical");
    const auto labels = j.at("index_set").get<std::vector<int>>();
    RatMatrix pairing = rat_matrix_from_json(j.at("pairing"));
    if (pairing.size() != labels.size())
        throw InvalidParameter("pairing size differs from the index set");
    const std::size_t n = labels.size();
    std::vector<std::vector<int>> orders(n, std::vector<int>(n, 1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b) orders[a][b] = detail::inferred_order(pairing[a][b] * pairing[b][a]);
    std::vector<RootVector> radical;
    CoxeterSystem system(labels, std::move(orders));
    for (const auto& row : j.at("radical")) {
        std::vector<Rational> dense;
        for (const auto& v : row) dense.push_back(rational_from_json(v));
        if (dense.size() != n) throw InvalidParameter("radical vector length differs from index set");
        RootVector r;
        for (std::size_t i = 0; i < n; ++i) r.set(labels[i], dense[i]);
        radical.push_back(std::move(r));
    }
    return Realization(std::move(system), std::move(pairing), std::move(radical));
}

inline json abacus_to_json(const Abacus& ab, int m) {
    const auto pattern_name = [](LinePattern p) {
        switch (p) {
        case LinePattern::ascending: return "ascending";
        case LinePattern::descending: return "descending";
        default: return "undetermined";
        }
    };
    json lines = json::array();
    for (const auto& line : ab.lines)
        lines.push_back(json{{"symbols", line.symbols}, {"pattern", pattern_name(line.pattern)}});
    json factors = json::array();
    for (const auto& line : ab.lines) {
        const Interval iv = line_interval(m, line);
        if (line.symbols.size() == 1)
            factors.push_back("s" + std::to_string(iv.a));
        else
            factors.push_back(std::string(iv.dir == IntervalDirection::ascending ? "asc" : "desc") +
                              "(" + std::to_string(iv.a) + "," + std::to_string(iv.b) + ")");
    }
    return json{{"m", m},
                {"lines", std::move(lines)},
                {"u_prime", abacus_expression(ab).letters},
                {"factors", std::move(factors)}};
}

// ---- text emitters ----------------------------------------------------------

inline std::string expression_to_text(const Expression& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += 's' + std::to_string(w.letters[i]);
    }
    return out;
}

inline std::string matrix_to_text(const TriMatrix& t) {
    const std::size_t n = t.size();
    if (n == 0) return "(0x0)\n";
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    std::vector<std::size_t> width(n, 1);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            cells[k][j] = to_string(t.entries()[k][j]);
            width[j] = std::max(width[j], cells[k][j].size());
        }
    std::string out;
    for (std::size_t k = 0; k < n; ++k) {
        out += "[";
        for (std::size_t j = 0; j < n; ++j) {
            out += ' ';
            out += std::string(width[j] - cells[k][j].size(), ' ') + cells[k][j];
        }
        out += " ]\n";
    }
    return out;
}

// "a0 + 2 a1 - a2" with coefficients 1 suppressed; the zero vector prints "0".
inline std::string root_to_text(const RootVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lab, c] : v.coeffs()) {
        const bool neg = c < 0;
        const Rational abs = neg ? Rational(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (abs != 1) out += to_string(abs) + " ";
        out += "a" + std::to_string(lab);
        first = false;
    }
    return out;
}

inline std::string extended_to_text(const ExtendedTriMatrix& e) {
    const std::size_t n = e.t.size();
    if (n == 0) return "(0x0)\n";
    std::vector<std::string> roots(n);
    std::size_t rootw = 1;
    for (std::size_t k = 0; k < n; ++k) {
        roots[k] = root_to_text(e.q[k]);
        rootw = std::max(rootw, roots[k].size());
    }
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    std::vector<std::size_t> width(n, 1);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            cells[k][j] = to_string(e.t.entries()[k][j]);
            width[j] = std::max(width[j], cells[k][j].size());
        }
    std::string out;
    for (std::size_t k = 0; k < n; ++k) {
        out += "[ " + roots[k] + std::string(rootw - roots[k].size(), ' ') + " |";
        for (std::size_t j = 0; j < n; ++j) {
            out += ' ';
            out += std::string(width[j] - cells[k][j].size(), ' ') + cells[k][j];
        }
        out += " ]\n";
    }
    return out;
}

// One relation per generator: "<name>_r^2 = c <name>_j <name>_r + ...".
inline std::vector<std::string> relation_lines(const TriMatrix& t, const std::string& name) {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < t.size(); ++r) {
        std::string line = name + "_" + std::to_string(r + 1) + "^2 =";
        bool first = true;
        for (std::size_t j = 0; j < r; ++j) {
            const Rational& c = t.at(r, j);
            if (c == 0) continue;
            const bool neg = c < 0;
            const Rational abs = neg ? Rational(-c) : c;
            line += first ? (neg ? " -" : " ") : (neg ? " - " : " + ");
            if (abs != 1) line += to_string(abs) + " ";
            line += name + "_" + std::to_string(j + 1) + " " + name + "_" + std::to_string(r + 1);
            first = false;
        }
        if (first) line += " 0";
        out.push_back(std::move(line));
    }
    return out;
}

inline std::string relations_to_text(const TriMatrix& t, const std::string& name) {
    std::string out;
    for (const auto& line : relation_lines(t, name)) out += line + "\n";
    return out;
}

inline std::string element_to_text(const AlgebraElement& x, const std::string& name) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : x.terms()) {
        const bool neg = c < 0;
        const Rational abs = neg ? Rational(-c) : c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string factors;
        for (int i : subset_to_indices(s)) {
            if (!factors.empty()) factors += ' ';
            factors += name + "_" + std::to_string(i);
        }
        if (factors.empty())
            out += to_string(abs);
        else if (abs != 1)
            out += to_string(abs) + " " + factors;
        else
            out += factors;
        first = false;
    }
    return out;
}

inline std::string abacus_to_text(const Abacus& ab, int m) {
    std::string out;
    for (std::size_t i = 0; i < ab.lines.size(); ++i) {
        out += "line " + std::to_string(i + 1) + ":";
        for (int s : ab.lines[i].symbols) out += " " + std::to_string(s);
        out += "\n";
    }
    out += "u' = " + expression_to_text(abacus_expression(ab)) + "\n";
    const json factors = abacus_to_json(ab, m).at("factors");
    out += "factors:";
    for (const auto& f : factors) out += " " + f.get<std::string>();
    out += "\n";
    return out;
}

// ---- LaTeX emitters ---------------------------------------------------------

inline std::string rational_to_latex(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    const bool neg = q < 0;
    const Rational abs = neg ? Rational(-q) : q;
    return std::string(neg ? "-" : "") + "\\tfrac{" + abs.get_num().get_str() + "}{" +
           abs.get_den().get_str() + "}";
}

inline std::string matrix_to_latex(const TriMatrix& t) {
    std::string out = "\\left[\\begin{matrix}\n";
    for (std::size_t k = 0; k < t.size(); ++k) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (j) out += " & ";
            out += rational_to_latex(t.entries()[k][j]);
        }
        out += " \\\\\n";
    }
    out += "\\end{matrix}\\right]\n";
    return out;
}

inline std::string root_to_latex(const RootVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lab, c] : v.coeffs()) {
        const bool neg = c < 0;
        const Rational abs = neg ? Rational(-c) : c;
        out += first ? (neg ? "-" : "") : (neg ? "-" : "+");
        if (abs != 1) out += rational_to_latex(abs);
        out += "\\alpha_{" + std::to_string(lab) + "}";
        first = false;
    }
    return out;
}

inline std::string extended_to_latex(const ExtendedTriMatrix& e) {
    std::string out = "\\left[\\begin{matrix}\n";
    for (std::size_t k = 0; k < e.t.size(); ++k) {
        out += root_to_latex(e.q[k]);
        for (std::size_t j = 0; j < e.t.size(); ++j)
            out += " & " + rational_to_latex(e.t.entries()[k][j]);
        out += " \\\\\n";
    }
    out += "\\end{matrix}\\right]\n";
    return out;
}

inline std::string relations_to_latex(const TriMatrix& t, const std::string& name) {
    std::string out = "\\begin{aligned}\n";
    for (std::size_t r = 0; r < t.size(); ++r) {
        out += name + "_{" + std::to_string(r + 1) + "}^2 &=";
        bool first = true;
        for (std::size_t j = 0; j < r; ++j) {
            const Rational& c = t.at(r, j);
            if (c == 0) continue;
            const bool neg = c < 0;
            const Rational abs = neg ? Rational(-c) : c;
            out += first ? (neg ? " -" : " ") : (neg ? " - " : " + ");
            if (abs != 1) out += rational_to_latex(abs);
            out += name + "_{" + std::to_string(j + 1) + "} " + name + "_{" + std::to_string(r + 1) + "}";
            first = false;
        }
        if (first) out += " 0";
        out += " \\\\\n";
    }
    out += "\\end{aligned}\n";
    return out;
}

inline std::string element_to_latex(const AlgebraElement& x, const std::string& name) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : x.terms()) {
        const bool neg = c < 0;
        const Rational abs = neg ? Rational(-c) : c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string factors;
        for (int i : subset_to_indices(s)) factors += name + "_{" + std::to_string(i) + "} ";
        if (!factors.empty()) factors.pop_back();
        if (factors.empty())
            out += rational_to_latex(abs);
        else if (abs != 1)
            out += rational_to_latex(abs) + " " + factors;
        else
            out += factors;
        first = false;
    }
    return out;
}

} // namespace nilcox
