#pragma once

// Cohomological interpolation: fundamental and CSM classes of the orbits of a
// representation with finitely many orbits, solved from their restriction
// conditions as exact linear systems over a symmetric ansatz.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "expr.hpp"
#include "json_io.hpp"
#include "laurent_poly.hpp"
#include "linear_solve.hpp"

namespace mcc {

class no_solution : public computation_error {
public:
    using computation_error::computation_error;
};

class non_unique : public computation_error {
public:
    using computation_error::computation_error;
};

// Total degree of a polynomial; -1 for zero.
inline int total_degree(const laurent_poly& p) {
    int d = -1;
    for (const auto& t : p.terms()) {
        int s = 0;
        for (int e : t.exp) {
            if (e < 0) throw invalid_input("expected a polynomial, got " + to_string(p));
            s += e;
        }
        d = std::max(d, s);
    }
    return d;
}

inline laurent_poly homogeneous_part(const laurent_poly& p, int degree) {
    std::vector<term> ts;
    for (const auto& t : p.terms()) {
        int s = 0;
        for (int e : t.exp) s += e;
        if (s == degree) ts.push_back(t);
    }
    return laurent_poly::from_terms(p.vars(), std::move(ts));
}

// All exponent vectors of length k and total degree <= bound, in
// lexicographic order.
inline std::vector<exponent> exponents_up_to(std::size_t k, int bound) {
    std::vector<exponent> out;
    if (bound < 0) return out;
    exponent e(k, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == k) {
            out.push_back(e);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[i] = a;
            self(self, i + 1, left - a);
        }
        e[i] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

// Variable-substitution map; variables without an entry are fixed.
class restriction_map {
public:
    restriction_map() = default;
    explicit restriction_map(variables vars) : vars_(vars) {
        for (std::size_t i = 0; i < vars.size(); ++i) images_.push_back(laurent_poly::variable(vars, vars[i]));
    }

    void set(std::string_view var, laurent_poly image) { images_.at(vars_.require(var)) = std::move(image); }
    const laurent_poly& image(std::size_t i) const { return images_.at(i); }
    bool is_identity(std::size_t i) const {
        return images_[i] == laurent_poly::variable(vars_, vars_[i]);
    }

    laurent_poly apply(const laurent_poly& p) const {
        laurent_poly out(vars_);
        for (const auto& t : p.terms()) {
            laurent_poly r = laurent_poly::constant(vars_, t.coeff);
            for (std::size_t i = 0; i < t.exp.size(); ++i) {
                if (t.exp[i] < 0) throw invalid_input("restriction of a non-polynomial");
                if (t.exp[i] > 0) r *= images_[i].pow(static_cast<unsigned>(t.exp[i]));
            }
            out += r;
        }
        return out;
    }

    // Indices of the variables occurring in the image of some source variable.
    std::vector<std::size_t> target_variables(const std::vector<std::size_t>& sources) const {
        std::vector<bool> used(vars_.size(), false);
        for (std::size_t s : sources)
            for (const auto& t : images_.at(s).terms())
                for (std::size_t i = 0; i < t.exp.size(); ++i)
                    if (t.exp[i] != 0) used[i] = true;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (used[i]) out.push_back(i);
        return out;
    }

private:
    variables vars_;
    std::vector<laurent_poly> images_;
};

struct orbit_spec {
    std::string name;
    int codim = 0;
    restriction_map phi;
    laurent_poly euler;
    laurent_poly tangent_c;
};

struct symmetry_group {
    std::string name;
    std::vector<std::string> vars;
};

struct orbit_data {
    variables vars;
    std::vector<symmetry_group> symmetry;
    std::vector<orbit_spec> orbits;

    const orbit_spec& orbit(std::string_view name) const {
        for (const auto& o : orbits)
            if (o.name == name) return o;
        throw invalid_input("unknown orbit '" + std::string(name) + "'");
    }
};

inline void validate(const orbit_spec& o) {
    if (o.euler.is_zero()) throw invalid_input("orbit " + o.name + ": euler class is zero");
    if (o.tangent_c.is_zero()) throw invalid_input("orbit " + o.name + ": tangent Chern class is zero");
    if (o.codim < 0) throw invalid_input("orbit " + o.name + ": negative codimension");
    if (total_degree(o.euler) != o.codim || homogeneous_part(o.euler, o.codim) != o.euler)
        throw invalid_input("orbit " + o.name + ": euler class is not homogeneous of degree codim");
    total_degree(o.tangent_c);
    for (const auto& t : o.euler.terms())
        if (!t.coeff.is_constant()) throw invalid_input("orbit " + o.name + ": y in a cohomology class");
}

inline orbit_data orbit_data_from_json(const json& j) {
    orbit_data d;
    d.vars = variables(j.at("vars").get<std::vector<std::string>>());
    for (const auto& g : j.at("symmetry")) {
        symmetry_group s{g.at("name").get<std::string>(), g.at("vars").get<std::vector<std::string>>()};
        for (const auto& v : s.vars) d.vars.require(v);
        d.symmetry.push_back(std::move(s));
    }
    for (const auto& o : j.at("orbits")) {
        orbit_spec s;
        s.name = o.at("name").get<std::string>();
        s.codim = o.at("codim").get<int>();
        s.phi = restriction_map(d.vars);
        if (o.contains("phi"))
            for (const auto& [k, v] : o.at("phi").items()) s.phi.set(k, parse_laurent(v.get<std::string>(), d.vars));
        s.euler = parse_laurent(o.at("euler").get<std::string>(), d.vars);
        s.tangent_c = parse_laurent(o.at("tangent_c").get<std::string>(), d.vars);
        validate(s);
        d.orbits.push_back(std::move(s));
    }
    if (d.orbits.empty()) throw invalid_input("no orbits");
    return d;
}

// Polynomials in the elementary symmetric functions of each variable group.
class symmetric_ansatz {
public:
    explicit symmetric_ansatz(const orbit_data& d) : ambient_(d.vars) {
        std::vector<std::string> names;
        for (const auto& g : d.symmetry) {
            std::vector<laurent_poly> xs;
            for (const auto& v : g.vars) {
                xs.push_back(laurent_poly::variable(ambient_, v));
                roots_.push_back(ambient_.require(v));
            }
            // e_k by the recursion over prefixes.
            std::vector<laurent_poly> e(xs.size() + 1, laurent_poly(ambient_));
            e[0] = laurent_poly::one(ambient_);
            for (const auto& x : xs)
                for (std::size_t k = xs.size(); k >= 1; --k) e[k] += e[k - 1] * x;
            for (std::size_t k = 1; k <= xs.size(); ++k) {
                names.push_back(g.name + std::to_string(k));
                weights_.push_back(static_cast<int>(k));
                generators_.push_back(std::move(e[k]));
            }
        }
        sym_ = variables(std::move(names));
    }

    const variables& symmetric_variables() const { return sym_; }
    const variables& ambient_variables() const { return ambient_; }
    const std::vector<int>& weights() const { return weights_; }
    // Ambient indices of the variables in some symmetry group.
    const std::vector<std::size_t>& roots() const { return roots_; }

    int weighted_degree(const exponent& e) const {
        int s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += weights_[i] * e[i];
        return s;
    }

    // Monomials in the generators with weighted degree in [lo, hi], ordered by
    // degree and then lexicographically.
    std::vector<exponent> basis(int lo, int hi) const {
        std::vector<exponent> out;
        exponent e(sym_.size(), 0);
        auto rec = [&](auto&& self, std::size_t i, int deg) -> void {
            if (i == e.size()) {
                if (deg >= lo) out.push_back(e);
                return;
            }
            for (int a = 0; deg + a * weights_[i] <= hi; ++a) {
                e[i] = a;
                self(self, i + 1, deg + a * weights_[i]);
            }
            e[i] = 0;
        };
        if (hi >= 0) rec(rec, 0, 0);
        std::stable_sort(out.begin(), out.end(), [&](const exponent& a, const exponent& b) {
            return weighted_degree(a) < weighted_degree(b);
        });
        return out;
    }

    laurent_poly expand(const exponent& e) const {
        laurent_poly r = laurent_poly::one(ambient_);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) r *= generators_[i].pow(static_cast<unsigned>(e[i]));
        return r;
    }
    laurent_poly expand(const laurent_poly& s) const {
        laurent_poly r(ambient_);
        for (const auto& t : s.terms()) r += expand(t.exp) * laurent_poly::constant(ambient_, t.coeff);
        return r;
    }

    laurent_poly weighted_part(const laurent_poly& s, int degree) const {
        std::vector<term> ts;
        for (const auto& t : s.terms())
            if (weighted_degree(t.exp) == degree) ts.push_back(t);
        return laurent_poly::from_terms(sym_, std::move(ts));
    }

private:
    variables ambient_;
    variables sym_;
    std::vector<int> weights_;
    std::vector<std::size_t> roots_;
    std::vector<laurent_poly> generators_;
};

// Sum of terms by descending exponent, e.g. "A1^2 - A1*B1 - A2 + B2".
inline std::string format_symmetric(const laurent_poly& s) {
    if (s.is_zero()) return "0";
    std::string out;
    auto ts = s.terms();
    std::reverse(ts.begin(), ts.end());
    for (const auto& t : ts) {
        bool unit = detail::is_unit_monomial(t.exp);
        detail::append_signed(out, t.coeff.coeff(0), unit ? "" : format_monomial(s.vars(), t.exp), unit);
    }
    return out;
}

// "(deg-a part) + (deg-b part) + ..." in increasing weighted degree.
inline std::string format_graded(const laurent_poly& s, const symmetric_ansatz& ansatz) {
    if (s.is_zero()) return "0";
    int top = 0;
    for (const auto& t : s.terms()) top = std::max(top, ansatz.weighted_degree(t.exp));
    std::string out;
    for (int d = 0; d <= top; ++d) {
        laurent_poly part = ansatz.weighted_part(s, d);
        if (part.is_zero()) continue;
        out += (out.empty() ? "(" : " + (") + format_symmetric(part) + ")";
    }
    return out;
}

struct interpolation_result {
    std::string target;
    std::string mode;
    laurent_poly symmetric;  // in the elementary symmetric generators
    laurent_poly ambient;    // in the Chern roots
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
};

namespace detail {

// sum_k x_k columns[k] = rhs, coefficientwise.
struct poly_system {
    std::vector<laurent_poly> columns;
    laurent_poly rhs;
};

inline big_int integer_coeff(const ypoly& c) {
    if (!c.is_constant()) throw invalid_input("y in a cohomology class");
    return c.coeff(0);
}

inline solve_result solve_blocks(const std::vector<poly_system>& blocks, std::size_t unknowns,
                                 const std::vector<std::vector<std::size_t>>& column_index, std::size_t& equations) {
    integer_matrix A;
    std::vector<big_int> b;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        std::map<exponent, std::size_t> row_of;
        auto row = [&](const exponent& e) -> std::size_t {
            auto it = row_of.find(e);
            if (it != row_of.end()) return it->second;
            A.emplace_back(unknowns, big_int(0));
            b.emplace_back(0);
            row_of.emplace(e, A.size() - 1);
            return A.size() - 1;
        };
        const auto& blk = blocks[bi];
        for (std::size_t k = 0; k < blk.columns.size(); ++k)
            for (const auto& t : blk.columns[k].terms()) A[row(t.exp)][column_index[bi][k]] += integer_coeff(t.coeff);
        for (const auto& t : blk.rhs.terms()) b[row(t.exp)] += integer_coeff(t.coeff);
    }
    equations = A.size();
    return solve_exact(A, b);
}

inline interpolation_result finish(const std::string& target, const std::string& mode, const symmetric_ansatz& ansatz,
                                   const std::vector<exponent>& basis, const solve_result& r,
                                   std::size_t equations) {
    if (r.status == solve_status::none) throw no_solution(mode + " class of " + target + ": no solution");
    if (r.status == solve_status::non_unique)
        throw non_unique(mode + " class of " + target + ": solution is not unique");
    interpolation_result out;
    out.target = target;
    out.mode = mode;
    out.unknowns = r.x.size();
    out.equations = equations;
    out.rank = r.rank;
    std::vector<term> ts;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const big_rational& c = r.x[k];
        if (denominator(c) != 1) throw computation_error("non-integral coefficient in " + mode + " class of " + target);
        if (numerator(c) != 0) ts.push_back({basis[k], ypoly(numerator(c))});
    }
    out.symmetric = laurent_poly::from_terms(ansatz.symmetric_variables(), std::move(ts));
    out.ambient = ansatz.expand(out.symmetric);
    return out;
}

}  // namespace detail

// The homogeneous class of degree codim(target) restricting to the euler class
// at the target and to zero at every other orbit of codimension <= codim.
inline interpolation_result solve_fundamental(const orbit_data& d, std::string_view target) {
    const orbit_spec& t = d.orbit(target);
    symmetric_ansatz ansatz(d);
    auto basis = ansatz.basis(t.codim, t.codim);
    std::vector<laurent_poly> images;
    for (const auto& e : basis) images.push_back(ansatz.expand(e));

    std::vector<detail::poly_system> blocks;
    std::vector<std::vector<std::size_t>> cols;
    std::vector<std::size_t> ident(basis.size());
    for (std::size_t k = 0; k < ident.size(); ++k) ident[k] = k;
    for (const auto& o : d.orbits) {
        if (o.name != t.name && o.codim > t.codim) continue;
        detail::poly_system s;
        for (const auto& p : images) s.columns.push_back(o.phi.apply(p));
        s.rhs = o.name == t.name ? o.euler : laurent_poly(d.vars);
        blocks.push_back(std::move(s));
        cols.push_back(ident);
    }
    std::size_t equations = 0;
    auto r = detail::solve_blocks(blocks, basis.size(), cols, equations);
    return detail::finish(t.name, "fundamental", ansatz, basis, r, equations);
}

// The inhomogeneous class restricting to euler * tangent_c at the target and,
// at every other orbit, to a multiple of its tangent_c of degree below
// deg(euler * tangent_c). Divisibility is linearized by an unknown quotient of
// degree < deg(euler) in the variables that the Chern roots restrict to.
inline interpolation_result solve_csm(const orbit_data& d, std::string_view target) {
    const orbit_spec& t = d.orbit(target);
    symmetric_ansatz ansatz(d);
    int top = 0;
    for (const auto& o : d.orbits) top = std::max(top, total_degree(o.euler * o.tangent_c));
    auto basis = ansatz.basis(0, top);
    std::vector<laurent_poly> images;
    for (const auto& e : basis) images.push_back(ansatz.expand(e));

    std::vector<detail::poly_system> blocks;
    std::vector<std::vector<std::size_t>> cols;
    std::size_t unknowns = basis.size();
    for (const auto& o : d.orbits) {
        detail::poly_system s;
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < images.size(); ++k) {
            s.columns.push_back(o.phi.apply(images[k]));
            idx.push_back(k);
        }
        if (o.name == t.name) {
            s.rhs = o.euler * o.tangent_c;
        } else {
            s.rhs = laurent_poly(d.vars);
            auto vars = o.phi.target_variables(ansatz.roots());
            for (const auto& q : exponents_up_to(vars.size(), o.codim - 1)) {
                exponent e(d.vars.size(), 0);
                for (std::size_t i = 0; i < vars.size(); ++i) e[vars[i]] = q[i];
                s.columns.push_back(-(o.tangent_c * laurent_poly::monomial(d.vars, e)));
                idx.push_back(unknowns++);
            }
        }
        blocks.push_back(std::move(s));
        cols.push_back(std::move(idx));
    }
    std::size_t equations = 0;
    auto r = detail::solve_blocks(blocks, unknowns, cols, equations);
    return detail::finish(t.name, "csm", ansatz, basis, r, equations);
}

inline json to_json(const interpolation_result& r, const symmetric_ansatz& ansatz, const orbit_data& d) {
    json comps = json::array();
    int top = 0;
    for (const auto& t : r.symmetric.terms()) top = std::max(top, ansatz.weighted_degree(t.exp));
    for (int k = 0; k <= top && !r.symmetric.is_zero(); ++k) {
        auto part = ansatz.weighted_part(r.symmetric, k);
        if (!part.is_zero()) comps.push_back({{"degree", k}, {"class", format_symmetric(part)}});
    }
    json restr = json::array();
    for (const auto& o : d.orbits) restr.push_back({{"orbit", o.name}, {"value", to_string(o.phi.apply(r.ambient))}});
    return json{{"target", r.target},
                {"mode", r.mode},
                {"class", format_symmetric(r.symmetric)},
                {"components", comps},
                {"chern_roots", to_string(r.ambient)},
                {"restrictions", restr},
                {"unknowns", r.unknowns},
                {"equations", r.equations},
                {"rank", r.rank}};
}

}  // namespace mcc
