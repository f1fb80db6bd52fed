#pragma once

// Command-line front end. run() parses the arguments, writes the result to
// `out` (or the --output file) and returns the exit code:
//   0 success, 1 the report contains violations, 2 invalid input or a fault.

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "axioms.hpp"
#include "expand.hpp"
#include "interp.hpp"
#include "newton.hpp"
#include "svg.hpp"
#include "weightfn.hpp"

namespace mcc::cli {

enum exit_code : int { success = 0, violations = 1, failure = 2 };

struct run_config {
    std::string format = "text";
    std::string output;
    unsigned jobs = default_jobs();
    bool verbose = false;

    int n = 0;
    std::string mu;
    std::string index;
    bool all = false;
    bool restrict_ = false;
    std::string kind = "modified";
    std::string perm;
    bool nonequivariant = false;
    bool s_delta = false;
    std::string only;
    std::string rule = "length";
    std::vector<std::string> cocharacters;
    std::string class_file;
    std::string data_file;
    std::string target = "Omega1";
    std::string mode = "fundamental";
    std::string pair;
    std::string svg_file;
    std::string contains;
};

// Result text plus exit code of one subcommand.
struct outcome {
    std::string text;
    int code = success;
};

namespace detail {

inline int max_n() {
    if (const char* v = std::getenv("MCCLASS_MAX_N")) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            throw invalid_input("MCCLASS_MAX_N is not an integer");
        }
    }
    return 6;
}

inline void guard_n(int n) {
    if (n < 1) throw invalid_input("n must be positive");
    if (n > max_n())
        throw invalid_input("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n()) +
                            " (set MCCLASS_MAX_N to raise it)");
}

inline std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (tok.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw invalid_input("not an integer list: '" + s + "'");
        }
    }
    if (out.empty()) throw invalid_input("empty integer list");
    return out;
}

// "2,3,1" or "231".
inline permutation parse_permutation(const std::string& s) {
    if (s.find(',') != std::string::npos) return permutation(parse_ints(s));
    std::vector<int> w;
    for (char c : s) {
        if (c < '1' || c > '9') throw invalid_input("not a permutation: '" + s + "'");
        w.push_back(c - '0');
    }
    return permutation(std::move(w));
}

inline composition resolve_mu(const run_config& c) {
    composition mu = !c.mu.empty() ? composition(parse_ints(c.mu))
                     : c.n > 0     ? composition::full_flag(c.n)
                                   : throw invalid_input("give --mu or --n");
    guard_n(mu.n());
    return mu;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw invalid_input(path + ": " + e.what());
    }
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw invalid_input("cannot write " + path);
    f << text;
}

inline std::string format_rational(const rational_expr& r) {
    if (r.den().is_constant() && r.den().constant_term() == ypoly(1)) return to_string(r.num());
    return "(" + to_string(r.num()) + ") / (" + to_string(r.den()) + ")";
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline outcome cmd_weight(const run_config& c) {
    using namespace detail;
    const composition mu = resolve_mu(c);
    std::vector<index_tuple> cells;
    if (c.all || c.index.empty())
        cells = enumerate_index_tuples(mu);
    else
        cells.push_back(parse_index_tuple(mu, c.index));
    if (c.kind != "plain" && c.kind != "modified" && c.kind != "hat")
        throw invalid_input("--kind must be plain, modified or hat");

    if (c.restrict_) {
        const auto points = enumerate_index_tuples(mu);
        const auto chart = torus_chart::identity(mu.n());
        const std::string tag = c.kind == "plain" ? "W" : c.kind == "modified" ? "W~" : "W^";
        std::vector<std::vector<std::string>> rows;
        if (c.kind == "hat") {
            for (const auto& I : cells) {
                std::vector<std::string> r;
                for (const auto& J : points) r.push_back(format_rational(restricted_hat_weight(I, J, chart)));
                rows.push_back(std::move(r));
            }
        } else {
            auto kind = c.kind == "plain" ? weight_kind::plain : weight_kind::modified;
            auto table = localization_table(mu, kind, chart, c.jobs);
            for (const auto& I : cells) {
                std::vector<std::string> r;
                for (const auto& J : points) r.push_back(to_string(table[static_cast<std::size_t>(
                                                  std::find(points.begin(), points.end(), I) - points.begin())]
                                                                       .at(J)));
                rows.push_back(std::move(r));
            }
        }
        if (c.format == "json") {
            json pts = json::array(), js = json::array();
            for (const auto& J : points) pts.push_back(J.to_string());
            for (std::size_t i = 0; i < cells.size(); ++i) js.push_back({{"I", cells[i].to_string()}, {"values", rows[i]}});
            return {dump({{"mu", mu.to_string()}, {"kind", c.kind}, {"points", pts}, {"rows", js}})};
        }
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t k = 0; k < points.size(); ++k)
                s += tag + "[" + cells[i].to_string() + "]|[" + points[k].to_string() + "] = " + rows[i][k] + "\n";
        return {s};
    }

    const auto cp = chern_products(mu);
    json classes = json::array();
    std::string s = "c = " + to_string(cp.c) + "\nc' = " + to_string(cp.c_prime) + "\n";
    for (const auto& I : cells) {
        laurent_poly w = weight_function(I);
        std::string wt = format_rational(rational_expr(w, cp.c));
        std::string wh = format_rational(rational_expr(w, cp.c_prime));
        s += "W[" + I.to_string() + "] = " + to_string(w) + "\n";
        if (c.verbose) {
            s += "W~[" + I.to_string() + "] = " + wt + "\n";
            s += "W^[" + I.to_string() + "] = " + wh + "\n";
        }
        classes.push_back({{"I", I.to_string()}, {"W", to_string(w)}, {"W_modified", wt}, {"W_hat", wh}});
    }
    if (c.format == "json")
        return {dump({{"mu", mu.to_string()},
                      {"variables", variable_panel(mu).vars().names()},
                      {"c", to_string(cp.c)},
                      {"c_prime", to_string(cp.c_prime)},
                      {"classes", classes}})};
    return {s};
}

inline outcome cmd_axioms(const run_config& c) {
    const composition mu = detail::resolve_mu(c);
    axiom_report r = check_axioms(mu, c.jobs);
    if (!c.only.empty()) r = only(std::move(r), c.only);
    int code = r.failures() == 0 ? success : violations;
    if (c.format == "json") return {detail::dump(to_json(r)), code};
    std::string s = "axioms for mu = (" + mu.to_string() + ")\n";
    for (const auto& name : r.checks)
        s += name + ": " + std::to_string(r.count(name, true)) + " pass, " + std::to_string(r.count(name, false)) +
             " fail\n";
    for (const auto& e : r.entries)
        if (!e.pass || c.verbose)
            s += std::string(e.pass ? "pass " : "FAIL ") + e.check + " " + (e.cell.empty() ? "" : e.cell + " at ") +
                 e.point + (e.witness.empty() ? "" : ": " + e.witness) + "\n";
    s += r.failures() == 0 ? "all checks pass\n" : std::to_string(r.failures()) + " violations\n";
    return {s, code};
}

inline outcome cmd_expand(const run_config& c) {
    const int n = c.n > 0 ? c.n : throw invalid_input("give --n");
    detail::guard_n(n);
    std::vector<permutation> ps;
    if (c.perm.empty())
        ps = permutations_by_length(n);
    else
        ps.push_back(detail::parse_permutation(c.perm));
    for (const auto& p : ps)
        if (p.n() != n) throw invalid_input("permutation " + p.to_string() + " is not in S_" + std::to_string(n));

    std::string s;
    json arr = json::array();
    if (c.nonequivariant) {
        expander ex(n, torus_chart::generic_cocharacter(n), c.jobs);
        for (const auto& p : ps) {
            auto e = ex.expand(p);
            auto ne = specialize_nonequivariant(e);
            s += format_nonequivariant(p, e.basis, ne) + "\n";
            json co = json::array();
            for (std::size_t k = 0; k < ne.size(); ++k)
                if (!ne[k].is_zero()) co.push_back({{"w", permutation_json(e.basis[k])}, {"poly", ne[k].to_string()}});
            arr.push_back({{"p", permutation_json(p)}, {"coeffs", co}});
        }
    } else {
        expander ex(n, torus_chart::identity(n), c.jobs);
        for (const auto& p : ps) {
            auto e = ex.expand(p);
            s += format_expansion(e) + "\n";
            json j = to_json(e);
            if (c.s_delta) {
                json sd = json::array();
                for (std::size_t k = 0; k < e.basis.size(); ++k) {
                    if (e.coeffs[k].is_zero()) continue;
                    std::string v = to_string(substitute_s_delta(e.coeffs[k], n));
                    s += "  [" + e.basis[k].to_string() + "]: " + v + "\n";
                    sd.push_back({{"w", permutation_json(e.basis[k])}, {"poly", v}});
                }
                j["s_delta"] = sd;
            }
            arr.push_back(std::move(j));
        }
    }
    if (c.format == "json") return {detail::dump(arr)};
    return {s};
}

inline outcome cmd_conjectures(const run_config& c) {
    const int n = c.n > 0 ? c.n : throw invalid_input("give --n");
    detail::guard_n(n);
    if (!c.only.empty() && c.only != "sign" && c.only != "log-concavity" && c.only != "s-delta")
        throw invalid_input("--only must be sign, log-concavity or s-delta");
    if (c.rule != "length" && c.rule != "dimension") throw invalid_input("--s-delta-rule must be length or dimension");
    auto want = [&](const char* k) { return c.only.empty() || c.only == k; };

    std::vector<conjecture_report> reps;
    if (want("sign") || want("s-delta")) {
        expander ex(n, torus_chart::identity(n), c.jobs);
        if (want("sign")) reps.push_back(check_sign_conjecture(ex));
        if (want("s-delta"))
            reps.push_back(check_s_delta_signs(ex, c.rule == "length" ? s_delta_rule::length : s_delta_rule::dimension));
    }
    if (want("log-concavity")) reps.push_back(check_log_concavity(expander(n, torus_chart::generic_cocharacter(n), c.jobs)));

    std::size_t total = 0;
    for (const auto& r : reps) total += r.violations.size();
    int code = total == 0 ? success : violations;
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : reps) arr.push_back(to_json(r));
        return {detail::dump(arr), code};
    }
    std::string s;
    for (const auto& r : reps) {
        s += r.name + " n=" + std::to_string(r.n) + ": " + std::to_string(r.checked) + " coefficients, " +
             std::to_string(r.violations.size()) + " violations\n";
        for (const auto& v : r.violations)
            s += "  mC[" + v.p.to_string() + "] at [" + v.w.to_string() + "]: " + v.detail + "\n";
    }
    return {s, code};
}

inline outcome cmd_limit(const run_config& c) {
    std::vector<std::vector<int>> ds;
    for (const auto& t : c.cocharacters) ds.push_back(detail::parse_ints(t));
    std::string source = "quadratic cone";
    rational_expr f(quadratic_cone_class(), quadratic_cone_euler());
    if (!c.class_file.empty()) {
        json j = detail::read_json_file(c.class_file);
        variables vars(j.at("vars").get<std::vector<std::string>>());
        laurent_poly num = parse_laurent(j.at("class").get<std::string>(), vars);
        laurent_poly den = j.contains("denominator") ? parse_laurent(j["denominator"].get<std::string>(), vars)
                                                     : laurent_poly::one(vars);
        f = rational_expr(num, den);
        source = c.class_file;
    }
    if (ds.empty()) ds = {{1, 0, 0}, {-1, 0, 0}, {-1, 2, 0}};
    json arr = json::array();
    std::string s;
    for (const auto& d : ds) {
        std::string label = "(";
        for (std::size_t i = 0; i < d.size(); ++i) label += (i ? "," : "") + std::to_string(d[i]);
        label += ")";
        ypoly v = limit_at_infinity(f, cocharacter{d});
        s += "d = " + label + ": " + v.to_string() + "\n";
        arr.push_back({{"cocharacter", d}, {"limit", v.to_string()}});
    }
    if (c.format == "json") return {detail::dump({{"class", source}, {"rows", arr}})};
    return {s};
}

inline std::string default_data_file() {
#ifdef MCCLASS_DATA_DIR
    return MCCLASS_DATA_DIR "/a2quiver.json";
#else
    return "data/a2quiver.json";
#endif
}

inline outcome cmd_interpolate(const run_config& c) {
    const orbit_data d = orbit_data_from_json(detail::read_json_file(c.data_file.empty() ? default_data_file() : c.data_file));
    const symmetric_ansatz ansatz(d);
    const orbit_spec& t = d.orbit(c.target);
    if (c.mode == "fundamental") {
        auto r = solve_fundamental(d, c.target);
        if (c.format == "json") return {detail::dump(to_json(r, ansatz, d))};
        std::string s = "[" + t.name + "] = " + format_symmetric(r.symmetric) + "\n";
        s += "unknowns " + std::to_string(r.unknowns) + ", equations " + std::to_string(r.equations) + ", rank " +
             std::to_string(r.rank) + ", unique\n";
        return {s};
    }
    if (c.mode != "csm") throw invalid_input("--mode must be fundamental or csm");
    auto r = solve_csm(d, c.target);
    auto fund = solve_fundamental(d, c.target);
    const laurent_poly lowest = ansatz.weighted_part(r.symmetric, t.codim);
    bool lowest_ok = lowest == fund.symmetric;
    bool target_ok = t.phi.apply(r.ambient) == t.euler * t.tangent_c;
    int code = lowest_ok && target_ok ? success : violations;
    if (c.format == "json") {
        json j = to_json(r, ansatz, d);
        j["fundamental_class"] = format_symmetric(fund.symmetric);
        j["lowest_component_is_fundamental"] = lowest_ok;
        j["normalization_at_target"] = target_ok;
        return {detail::dump(j), code};
    }
    std::string s = "csm(" + t.name + ") = " + format_graded(r.symmetric, ansatz) + "\n";
    for (const auto& o : d.orbits) s += "phi[" + o.name + "] = " + to_string(o.phi.apply(r.ambient)) + "\n";
    s += "restriction to " + t.name + " equals e(nu) c(T): " + detail::yes_no(target_ok) + "\n";
    s += "lowest degree component " + format_symmetric(lowest) + " equals [" + t.name +
         "] = " + format_symmetric(fund.symmetric) + ": " + detail::yes_no(lowest_ok) + "\n";
    s += "unknowns " + std::to_string(r.unknowns) + ", equations " + std::to_string(r.equations) + ", rank " +
         std::to_string(r.rank) + ", unique\n";
    return {s, code};
}

namespace detail {

inline std::string generator_list(const lattice_polytope& P) {
    std::string s;
    for (const auto& x : P.points()) s += (s.empty() ? "" : " ") + to_string(x);
    return s.empty() ? "(empty)" : s;
}

inline json generator_json(const lattice_polytope& P) {
    json a = json::array();
    for (const auto& x : P.points()) a.push_back(x);
    return a;
}

}  // namespace detail

inline outcome cmd_newton(const run_config& c) {
    if (!c.class_file.empty()) {
        json j = detail::read_json_file(c.class_file);
        variables vars(j.at("vars").get<std::vector<std::string>>());
        lattice_polytope P = newton_polytope(parse_laurent(j.at("class").get<std::string>(), vars));
        lattice_polytope V = vertices(P);
        int code = success;
        std::string s = "generators: " + detail::generator_list(P) + "\nvertices: " + detail::generator_list(V) + "\n";
        json out{{"vars", vars.names()}, {"generators", detail::generator_json(P)}, {"vertices", detail::generator_json(V)}};
        if (!c.contains.empty()) {
            lattice_point x = detail::parse_ints(c.contains);
            bool in = contains_point(P, x);
            code = in ? success : violations;
            s += "contains " + to_string(x) + ": " + detail::yes_no(in) + "\n";
            out["contains"] = in;
        }
        if (c.format == "json") return {detail::dump(out), code};
        return {s, code};
    }

    const int n = c.n > 0 ? c.n : throw invalid_input("give --n or --class");
    detail::guard_n(n);
    std::string ps = c.pair, qs;
    if (auto k = c.pair.find(';'); k != std::string::npos) {
        ps = c.pair.substr(0, k);
        qs = c.pair.substr(k + 1);
    } else if (auto k2 = c.pair.find(','); k2 != std::string::npos) {
        ps = c.pair.substr(0, k2);
        qs = c.pair.substr(k2 + 1);
    } else {
        throw invalid_input("--pair takes p,q (for example 231,312) or p;q");
    }
    permutation p = detail::parse_permutation(ps), q = detail::parse_permutation(qs);
    if (p.n() != n || q.n() != n) throw invalid_input("--pair permutations must lie in S_" + std::to_string(n));

    const auto chart = torus_chart::identity(n);
    const index_tuple I = cell_of(p), J = cell_of(q);
    const auto ld = local_data(J);
    const laurent_poly w = restricted_weight(I, J, weight_kind::modified, chart);
    const laurent_poly ek = k_euler(ld.normal, chart);
    const laurent_poly ck = k_chern(ld.tangent_cell, chart);
    lattice_polytope E = newton_polytope(ek);
    lattice_polytope C = newton_polytope(ck);
    std::vector<lattice_point> cot;
    for (const auto& t : ld.tangent_cell) {
        auto e = chart.ratio(t.z, t.x);
        cot.emplace_back(e.begin(), e.end());
    }

    std::string verdict;
    bool small = true;
    if (w.is_zero()) {
        verdict = "W~ restriction is zero";
    } else if (I == J) {
        verdict = "diagonal entry";
    } else {
        laurent_poly em1 = ek - chart.one();
        if (em1.is_zero()) {
            small = false;
            verdict = "e^K(nu) - 1 = 0 but the restriction is nonzero";
        } else {
            small = polytope_contained(newton_polytope(w), minkowski_sum(newton_polytope(em1), C));
            verdict = "N(W~) in N(e^K - 1) + N(c^K): " + detail::yes_no(small);
        }
    }
    int code = small ? success : violations;

    std::string title = "mC[" + p.to_string() + "] at [" + q.to_string() + "]";
    if (!c.svg_file.empty() || c.format == "svg") {
        if (n != 3) throw invalid_input("SVG pictures are drawn for n = 3");
        std::vector<svg_layer> layers{{"ek", E.points(), true}};
        if (!w.is_zero()) layers.push_back({"mc", newton_polytope(w).points(), true});
        layers.push_back({"cotangent", cot, false});
        std::string svg = render_svg(title, layers);
        if (!c.svg_file.empty()) {
            detail::write_file(c.svg_file, svg);
        } else {
            return {svg, code};
        }
    }
    if (c.format == "json") {
        json j{{"p", permutation_json(p)},
               {"q", permutation_json(q)},
               {"restriction", to_string(w)},
               {"euler", detail::generator_json(E)},
               {"tangent_chern", detail::generator_json(C)},
               {"cotangent_weights", cot},
               {"verdict", verdict}};
        j["restricted_class"] = w.is_zero() ? json::array() : detail::generator_json(newton_polytope(w));
        return {detail::dump(j), code};
    }
    std::string s = title + "\n";
    s += "W~ = " + to_string(w) + "\n";
    s += "N(W~): " + (w.is_zero() ? std::string("(empty)") : detail::generator_list(vertices(newton_polytope(w)))) + "\n";
    s += "N(e^K(nu)): " + detail::generator_list(vertices(E)) + "\n";
    s += "N(c^K(T)): " + detail::generator_list(vertices(C)) + "\n";
    std::string cs;
    for (const auto& x : cot) cs += (cs.empty() ? "" : " ") + to_string(x);
    s += "cotangent weights: " + (cs.empty() ? std::string("(none)") : cs) + "\n";
    s += verdict + "\n";
    return {s, code};
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    run_config c;
    CLI::App app{"Motivic Chern classes of Schubert cells and quiver orbits", "mcclass"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", c.format, "text, json or svg")->check(CLI::IsMember({"text", "json", "svg"}));
    app.add_option("--output,-o", c.output, "write the result to a file");
    app.add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--verbose,-v", c.verbose);

    auto* weight = app.add_subcommand("weight", "weight functions and their fixed-point restrictions");
    weight->add_option("--mu", c.mu, "composition, e.g. 1,2,1");
    weight->add_option("--n", c.n, "full flags of C^n");
    weight->add_option("--I", c.index, "cell, e.g. {1},{3},{2}");
    weight->add_flag("--all", c.all);
    weight->add_flag("--restrict", c.restrict_, "restrict to every fixed point");
    weight->add_option("--kind", c.kind, "plain, modified or hat");

    auto* axioms = app.add_subcommand("axioms", "check the axioms on every cell pair");
    axioms->add_option("--mu", c.mu);
    axioms->add_option("--n", c.n);
    axioms->add_option("--only", c.only, "a single check");

    auto* expand = app.add_subcommand("expand", "expansion in the structure-sheaf basis");
    expand->add_option("--n", c.n)->required();
    expand->add_option("--p", c.perm, "permutation, e.g. 2,3,1");
    expand->add_flag("--nonequivariant", c.nonequivariant);
    expand->add_flag("--s-delta", c.s_delta, "coefficients in the s, delta variables");

    auto* conj = app.add_subcommand("conjectures", "sign, log-concavity and s-delta reports");
    conj->add_option("--n", c.n)->required();
    conj->add_option("--only", c.only, "sign, log-concavity or s-delta");
    conj->add_option("--s-delta-rule", c.rule, "length or dimension");

    auto* limit = app.add_subcommand("limit", "limits along one-parameter subgroups");
    limit->add_option("--cocharacter", c.cocharacters, "weights, e.g. -1,2,0")->allow_extra_args(false);
    limit->add_option("--class", c.class_file, "JSON file with vars, class and optional denominator");

    auto* interp = app.add_subcommand("interpolate", "interpolation for quiver orbits");
    interp->add_option("--data", c.data_file, "orbit data JSON");
    interp->add_option("--target", c.target);
    interp->add_option("--mode", c.mode, "fundamental or csm");

    auto* newton = app.add_subcommand("newton", "Newton polytopes and pictures");
    newton->add_option("--n", c.n);
    newton->add_option("--pair", c.pair, "cell and fixed point, e.g. 231,312");
    newton->add_option("--svg", c.svg_file, "write an SVG picture");
    newton->add_option("--class", c.class_file, "JSON file with vars and class");
    newton->add_option("--contains", c.contains, "lattice point, e.g. 0,1,-1");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }

    try {
        outcome o;
        if (weight->parsed())
            o = cmd_weight(c);
        else if (axioms->parsed())
            o = cmd_axioms(c);
        else if (expand->parsed())
            o = cmd_expand(c);
        else if (conj->parsed())
            o = cmd_conjectures(c);
        else if (limit->parsed())
            o = cmd_limit(c);
        else if (interp->parsed())
            o = cmd_interpolate(c);
        else
            o = cmd_newton(c);
        if (c.output.empty())
            out << o.text;
        else
            detail::write_file(c.output, o.text);
        return o.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }
}

}  // namespace mcc::cli
