// Command line front end: every verb resolves a realization (built-in cyclic
// via --m, or a JSON file via --realization), parses an expression where one is
// needed, and emits text, json or latex. Exit codes: 0 success, 1 a check
// failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <nilcox/nilcox.hpp>

namespace {

using namespace nilcox;

struct CommonArgs {
    int m = 0;
    std::string realization_file;
    std::vector<std::string> expr;
    std::string format = "text";
    std::string names;
};

std::string join_expr(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

void add_realization_options(CLI::App* cmd, CommonArgs& args) {
    auto* opt_m = cmd->add_option("--m", args.m, "residue count of the built-in cyclic realization")
                      ->check(CLI::Range(2, 1000000));
    auto* opt_file = cmd->add_option("--realization", args.realization_file,
                                     "realization JSON file (index_set, pairing, radical)");
    opt_m->excludes(opt_file);
    opt_file->excludes(opt_m);
}

void add_expression_option(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("expr", args.expr,
                    "expression tokens: s<int>, asc(a,b), desc(a,b), asc(a,b)^h");
}

void add_format_option(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
}

Realization resolve_realization(const CommonArgs& args) {
    if ((args.m == 0) == args.realization_file.empty())
        throw InvalidParameter("exactly one of --m or --realization is required");
    if (args.m != 0) return make_type_a_realization(args.m);
    std::ifstream in(args.realization_file);
    if (!in) throw InvalidParameter("cannot open realization file " + args.realization_file);
    return realization_from_json(json::parse(in));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open file " + path);
    return json::parse(in);
}

int run_present(const CommonArgs& args) {
    const Realization real = resolve_realization(args);
    const Expression w = parse_expression(join_expr(args.expr), real);
    const TriMatrix t = t_matrix(real, w);
    const std::string name = args.names.empty() ? "J" : args.names;
    if (args.format == "json") {
        json out = matrix_to_json(t);
        out["name"] = name;
        out["relations"] = relation_lines(t, name);
        std::cout << out.dump(2) << "\n";
    } else if (args.format == "latex") {
        std::cout << relations_to_latex(t, name);
    } else {
        std::cout << relations_to_text(t, name);
    }
    return 0;
}

int run_matrix(const CommonArgs& args) {
    const Realization real = resolve_realization(args);
    const TriMatrix t = t_matrix(real, parse_expression(join_expr(args.expr), real));
    if (args.format == "json")
        std::cout << matrix_to_json(t).dump(2) << "\n";
    else if (args.format == "latex")
        std::cout << matrix_to_latex(t);
    else
        std::cout << matrix_to_text(t);
    return 0;
}

int run_extmatrix(const CommonArgs& args) {
    const Realization real = resolve_realization(args);
    const ExtendedTriMatrix e = extended_t_matrix(real, parse_expression(join_expr(args.expr), real));
    if (args.format == "json")
        std::cout << extended_to_json(e, real).dump(2) << "\n";
    else if (args.format == "latex")
        std::cout << extended_to_latex(e);
    else
        std::cout << extended_to_text(e);
    return 0;
}

std::string factor_latex(int m, const AbacusLine& line) {
    const Interval iv = line_interval(m, line);
    if (line.symbols.size() == 1) return "s_{" + std::to_string(iv.a) + "}";
    if (iv.dir == IntervalDirection::ascending)
        return "\\lfloor " + std::to_string(iv.a) + "," + std::to_string(iv.b) + "\\rfloor";
    return "\\lceil " + std::to_string(iv.a) + "," + std::to_string(iv.b) + "\\rceil";
}

int run_abacus(const CommonArgs& args) {
    if (args.m == 0) throw InvalidParameter("abacus works over the built-in cyclic realization; pass --m");
    const Expression u = parse_expression(join_expr(args.expr), args.m);
    const Abacus ab = abacus(args.m, u);
    if (args.format == "json") {
        std::cout << abacus_to_json(ab, args.m).dump(2) << "\n";
    } else if (args.format == "latex") {
        std::string out = "\\begin{array}{l}\n";
        for (const auto& line : ab.lines) {
            for (std::size_t i = 0; i < line.symbols.size(); ++i)
                out += (i ? "\\ " : "") + std::to_string(line.symbols[i]);
            out += " \\\\\n";
        }
        out += "\\end{array}\n";
        for (const auto& line : ab.lines) out += factor_latex(args.m, line);
        out += "\n";
        std::cout << out;
    } else {
        std::cout << abacus_to_text(ab, args.m);
    }
    return 0;
}

int run_dim(const CommonArgs& args) {
    const Realization real = resolve_realization(args);
    const TriMatrix t = t_matrix(real, parse_expression(join_expr(args.expr), real));
    const std::uint64_t dim = dimension(t);
    if (args.format == "json")
        std::cout << json{{"n", t.size()}, {"dimension", dim}}.dump(2) << "\n";
    else if (args.format == "latex")
        std::cout << "2^{" << t.size() << "} = " << dim << "\n";
    else
        std::cout << dim << "\n";
    return 0;
}

int run_mul(const CommonArgs& args, const std::string& lhs_file, const std::string& rhs_file) {
    const Realization real = resolve_realization(args);
    const TriMatrix t = t_matrix(real, parse_expression(join_expr(args.expr), real));
    const AlgebraElement lhs = element_from_json(load_json_file(lhs_file), t);
    const AlgebraElement rhs = element_from_json(load_json_file(rhs_file), t);
    const AlgebraElement prod = multiply(lhs, rhs);
    const std::string name = args.names.empty() ? "X" : args.names;
    if (args.format == "json")
        std::cout << element_to_json(prod).dump(2) << "\n";
    else if (args.format == "latex")
        std::cout << element_to_latex(prod, name) << "\n";
    else
        std::cout << element_to_text(prod, name) << "\n";
    return 0;
}

int run_check_morphism(const std::string& spec_file, bool iso) {
    const MorphismSpec f = morphism_from_json(load_json_file(spec_file));
    const bool ok = iso ? is_isomorphism(f) : is_morphism(f);
    std::cout << (iso ? "isomorphism: " : "morphism: ") << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int run_blob_compare(int m, int h, int a_opt, bool a_given, const std::string& format) {
    const TriMatrix blob = blob_matrix(m, h);
    const Realization real = make_type_a_realization(m);
    std::vector<int> starts;
    if (a_given)
        starts.push_back(mod_residue(a_opt, m));
    else
        for (int a = 0; a < m; ++a) starts.push_back(a);
    bool all_agree = true;
    std::vector<int> disagreeing;
    for (int a : starts) {
        Expression u;
        for (int rep = 0; rep < h; ++rep)
            for (int k = 0; k < m; ++k) u.letters.push_back(mod_residue(a + k, m));
        if (!(blob == t_matrix(real, u))) {
            all_agree = false;
            disagreeing.push_back(a);
        }
    }
    if (format == "json") {
        json out{{"m", m},      {"h", h},     {"checked_residues", starts},
                 {"agree", all_agree}, {"disagreeing_residues", disagreeing}};
        out["matrix"] = matrix_to_json(blob);
        std::cout << out.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << matrix_to_latex(blob);
        std::cout << "% " << (all_agree ? "agrees" : "DISAGREES") << " with the defining matrix\n";
    } else {
        std::cout << matrix_to_text(blob);
        for (int a : starts)
            std::cout << "residue " << a << ": "
                      << (std::find(disagreeing.begin(), disagreeing.end(), a) == disagreeing.end()
                              ? "agrees"
                              : "DISAGREES")
                      << "\n";
        std::cout << (all_agree ? "dot-line matrix confirmed" : "dot-line matrix MISMATCH") << "\n";
    }
    return all_agree ? 0 : 1;
}

int run_selftest_verb() {
    const auto results = run_selftest();
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.passed) {
            ++passed;
            std::cout << "ok " << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.name << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
        }
    }
    std::cout << "selftest: " << passed << "/" << results.size() << " checks passed\n";
    return passed == results.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for the nil graded algebras of triangular matrices"};
    app.require_subcommand(1);
    int max_n = 0;
    app.add_option("--max-n", max_n, "override the generator limit (default 30, hard cap 32)")
        ->check(CLI::Range(0, 32));

    CommonArgs present_args, matrix_args, ext_args, abacus_args, dim_args, mul_args;
    std::string lhs_file, rhs_file, spec_morph, spec_iso;
    int blob_m = 0, blob_h = 0, blob_a = 0;
    std::string blob_format = "text";

    auto* present = app.add_subcommand("present", "emit the defining relation list of A(T_u)");
    add_realization_options(present, present_args);
    add_expression_option(present, present_args);
    add_format_option(present, present_args);
    present->add_option("--names", present_args.names, "generator display name (default J)");

    auto* matrix = app.add_subcommand("matrix", "emit the matrix T_u");
    add_realization_options(matrix, matrix_args);
    add_expression_option(matrix, matrix_args);
    add_format_option(matrix, matrix_args);

    auto* extmatrix = app.add_subcommand("extmatrix", "emit the extended matrix [Q_u | T_u]");
    add_realization_options(extmatrix, ext_args);
    add_expression_option(extmatrix, ext_args);
    add_format_option(extmatrix, ext_args);

    auto* abacus_cmd = app.add_subcommand("abacus", "place the letters of u on abacus lines");
    abacus_cmd->add_option("--m", abacus_args.m, "residue count")->required()->check(CLI::Range(2, 1000000));
    add_expression_option(abacus_cmd, abacus_args);
    add_format_option(abacus_cmd, abacus_args);

    auto* dim = app.add_subcommand("dim", "emit the dimension 2^(length of u) of A(T_u)");
    add_realization_options(dim, dim_args);
    add_expression_option(dim, dim_args);
    add_format_option(dim, dim_args);

    auto* mul = app.add_subcommand("mul", "multiply two algebra elements over A(T_u)");
    add_realization_options(mul, mul_args);
    add_expression_option(mul, mul_args);
    add_format_option(mul, mul_args);
    mul->add_option("--lhs", lhs_file, "left factor JSON file")->required();
    mul->add_option("--rhs", rhs_file, "right factor JSON file")->required();
    mul->add_option("--names", mul_args.names, "generator display name (default X)");

    auto* chk_morph = app.add_subcommand("check-morphism", "check a morphism spec JSON");
    chk_morph->add_option("--spec", spec_morph, "morphism spec JSON file")->required();

    auto* chk_iso = app.add_subcommand("check-iso", "check a morphism spec JSON for isomorphism");
    chk_iso->add_option("--spec", spec_iso, "morphism spec JSON file")->required();

    auto* blob = app.add_subcommand("blob-compare",
                                    "compare the dot-line closed form against the defining matrix");
    blob->set_help_flag("--help", "print this help message and exit"); // frees -h for --h below
    blob->add_option("--m", blob_m, "residue count")->required()->check(CLI::Range(2, 64));
    blob->add_option("--h", blob_h, "number of stacked full cycles")->required()->check(CLI::Range(1, 64));
    auto* blob_a_opt = blob->add_option("--a", blob_a, "check a single starting residue");
    blob->add_option("--format", blob_format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in example suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (max_n != 0) set_max_generators(max_n);
        if (present->parsed()) return run_present(present_args);
        if (matrix->parsed()) return run_matrix(matrix_args);
        if (extmatrix->parsed()) return run_extmatrix(ext_args);
        if (abacus_cmd->parsed()) return run_abacus(abacus_args);
        if (dim->parsed()) return run_dim(dim_args);
        if (mul->parsed()) return run_mul(mul_args, lhs_file, rhs_file);
        if (chk_morph->parsed()) return run_check_morphism(spec_morph, false);
        if (chk_iso->parsed()) return run_check_morphism(spec_iso, true);
        if (blob->parsed())
            return run_blob_compare(blob_m, blob_h, blob_a, blob_a_opt->count() > 0, blob_format);
        if (selftest_cmd->parsed()) return run_selftest_verb();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
