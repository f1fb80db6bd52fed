#pragma once

// Checks of the local axioms for motivic Chern classes of Schubert cells,
// computed from the modified weight functions, and the quadratic cone example.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combi.hpp"
#include "division.hpp"
#include "expr.hpp"
#include "json_io.hpp"
#include "laurent_poly.hpp"
#include "newton.hpp"
#include "parallel.hpp"
#include "rational_expr.hpp"
#include "torus_chart.hpp"
#include "weightfn.hpp"

namespace mcc {

// Tangent weights of Fl_mu at the fixed point of I, split into the directions
// along the cell and the normal ones (t_x / t_z with z > x, l(I) of them).
struct orbit_local_data {
    index_tuple point;
    std::vector<tangent_weight> tangent_cell;
    std::vector<tangent_weight> normal;
};

inline orbit_local_data local_data(const index_tuple& I) {
    orbit_local_data d{I, {}, {}};
    for (const auto& w : tangent_weights(I)) (w.normal ? d.normal : d.tangent_cell).push_back(w);
    return d;
}

struct check_entry {
    std::string check;
    std::string cell;   // I, or empty for per-point checks
    std::string point;  // J
    bool pass;
    std::string witness;
};

struct axiom_report {
    composition mu;
    std::vector<std::string> checks;  // names in run order
    std::vector<check_entry> entries;

    std::size_t failures() const {
        std::size_t k = 0;
        for (const auto& e : entries) k += !e.pass;
        return k;
    }
    std::size_t count(const std::string& check, bool passed) const {
        std::size_t k = 0;
        for (const auto& e : entries) k += e.check == check && e.pass == passed;
        return k;
    }
};

namespace detail {

inline lattice_point origin(std::size_t dim) { return lattice_point(dim, 0); }

struct point_data {
    laurent_poly euler;         // e^K(nu_J)
    laurent_poly chern;         // c^K(T_J)
    laurent_poly lambda_y;      // lambda_y(T* Fl)|_J
    laurent_poly c;             // c_mu|_J
    laurent_poly c_prime;       // c'_mu|_J
    laurent_poly delta;         // symmetrizer denominator at J
    fixed_point_context ctx;
};

inline point_data make_point_data(const index_tuple& J, const torus_chart& chart) {
    auto ld = local_data(J);
    auto ctx = make_context(J, chart);
    return {k_euler(ld.normal, chart), k_chern(ld.tangent_cell, chart), total_lambda_y(J, chart), ctx.c,
            ctx.c_prime,               ctx.delta,                       std::move(ctx)};
}

}  // namespace detail

// Runs every axiom check on Fl_mu with the full torus.
//   normalization   W~_I|_I = e^K(nu_I) c^K(T_I)
//   divisibility    c^K(T_J) divides W~_I|_J
//   support         W~_I|_J = 0 unless the cell of J lies in the closure of I
//   smallness       N(W~_I|_J) in N(e^K(nu_J) - 1) + N(c^K(T_J)), strictly
//                   inside N(W~_J|_J); 0 a vertex of the latter, not in the former
//   euler_vertex    e^K(nu_I) != 0 and 0 is a vertex of its Newton polytope
//   additivity      sum_I W~_I|_J = lambda_y(T* Fl)|_J
//   motivic_segre   W^_I|_J lambda_y(T* Fl)|_J = W~_I|_J
inline axiom_report check_axioms(const composition& mu, unsigned jobs = 1) {
    const auto chart = torus_chart::identity(mu.n());
    const auto ts = enumerate_index_tuples(mu);
    const std::size_t m = ts.size();
    const std::size_t dim = chart.target().size();

    auto points = parallel_map(m, jobs, [&](std::size_t k) { return detail::make_point_data(ts[k], chart); });
    // plain[i * m + k] = W_{I_i}|_{J_k}
    auto plain = parallel_map(m * m, jobs, [&](std::size_t idx) {
        const auto& pd = points[idx % m];
        return exact_divide(detail::restricted_numerator(ts[idx / m], pd.ctx), pd.delta);
    });
    auto tilde = parallel_map(m * m, jobs, [&](std::size_t idx) { return exact_divide(plain[idx], points[idx % m].c); });

    // Newton data that only depends on the point.
    struct small_data {
        std::optional<lattice_polytope> middle;  // N(e^K - 1) + N(c^K), vertices only
        lattice_polytope big;
        bool strict;
        bool origin_vertex;
        std::string witness;
    };
    auto smalls = parallel_map(m, jobs, [&](std::size_t k) {
        const auto& pd = points[k];
        small_data s{std::nullopt, lattice_polytope(dim, {}), false, false, ""};
        const laurent_poly& diag = tilde[k * m + k];
        s.big = vertices(newton_polytope(diag));
        s.origin_vertex = is_vertex(s.big, detail::origin(dim));
        laurent_poly shifted = pd.euler - chart.one();
        if (!shifted.is_zero()) {
            s.middle = vertices(minkowski_sum(newton_polytope(shifted), newton_polytope(pd.chern)));
            auto w = containment_witness(*s.middle, s.big);
            if (w) {
                s.witness = "middle generator " + to_string(*w) + " outside N(W~_J|_J)";
            } else {
                for (const auto& b : s.big.points())
                    if (!contains_point(*s.middle, b)) {
                        s.strict = true;
                        break;
                    }
                if (!s.strict) s.witness = "N(e^K - 1) + N(c^K) equals N(W~_J|_J)";
            }
        } else {
            s.witness = "e^K(nu_J) - 1 vanishes";
        }
        return s;
    });

    axiom_report rep{mu,
                     {"normalization", "divisibility", "support", "smallness", "euler_vertex", "additivity",
                      "motivic_segre"},
                     {}};

    // Per-pair checks, computed in parallel and appended in a fixed order.
    auto pair_entries = parallel_map(m * m, jobs, [&](std::size_t idx) {
        std::vector<check_entry> out;
        const std::size_t i = idx / m, k = idx % m;
        const auto& I = ts[i];
        const auto& J = ts[k];
        const auto& pd = points[k];
        const laurent_poly& w = tilde[idx];
        const std::string cs = I.to_string(), ps = J.to_string();

        if (i == k) {
            laurent_poly expected = pd.euler * pd.chern;
            bool ok = w == expected;
            out.push_back({"normalization", cs, ps, ok, ok ? "" : "difference " + to_string(w - expected)});
        }
        {
            laurent_poly rem(chart.target());
            bool ok = detail::try_divide(w, pd.chern, &rem).has_value();
            out.push_back({"divisibility", cs, ps, ok, ok ? "" : "remainder " + to_string(rem)});
        }
        {
            bool inside = closure_leq(I, J);
            bool ok = inside || w.is_zero();
            out.push_back({"support", cs, ps, ok, ok ? "" : "nonzero value outside the closure"});
        }
        if (i != k && !w.is_zero()) {
            const auto& s = smalls[k];
            std::string witness;
            lattice_polytope small = newton_polytope(w);
            if (!s.middle) {
                witness = s.witness;
            } else if (auto g = containment_witness(small, *s.middle)) {
                witness = "generator " + to_string(*g) + " of N(W~_I|_J) outside N(e^K - 1) + N(c^K)";
            } else if (!s.witness.empty()) {
                witness = s.witness;
            } else if (!s.origin_vertex) {
                witness = "origin is not a vertex of N(W~_J|_J)";
            } else if (contains_point(small, detail::origin(dim))) {
                witness = "origin lies in N(W~_I|_J)";
            }
            out.push_back({"smallness", cs, ps, witness.empty(), witness});
        }
        {
            rational_expr hat(plain[idx], pd.c_prime);
            bool ok = equivalent(hat * rational_expr(pd.lambda_y), rational_expr(w));
            out.push_back({"motivic_segre", cs, ps, ok, ok ? "" : "W^ lambda_y differs from W~"});
        }
        return out;
    });

    for (std::size_t k = 0; k < m; ++k) {
        const auto& pd = points[k];
        bool ok = !pd.euler.is_zero() && is_vertex(newton_polytope(pd.euler), detail::origin(dim));
        rep.entries.push_back({"euler_vertex", "", ts[k].to_string(), ok, ok ? "" : "origin not a vertex"});
        laurent_poly sum(chart.target());
        for (std::size_t i = 0; i < m; ++i) sum += tilde[i * m + k];
        bool add = sum == pd.lambda_y;
        rep.entries.push_back(
            {"additivity", "", ts[k].to_string(), add, add ? "" : "difference " + to_string(sum - pd.lambda_y)});
    }
    for (auto& v : pair_entries)
        for (auto& e : v) rep.entries.push_back(std::move(e));
    return rep;
}

inline axiom_report only(axiom_report r, const std::string& check) {
    std::erase_if(r.entries, [&](const check_entry& e) { return e.check != check; });
    r.checks = {check};
    return r;
}

inline axiom_report check_normalization(const composition& mu, unsigned jobs = 1) {
    return only(check_axioms(mu, jobs), "normalization");
}
inline axiom_report check_divisibility(const composition& mu, unsigned jobs = 1) {
    return only(check_axioms(mu, jobs), "divisibility");
}
inline axiom_report check_smallness_strict(const composition& mu, unsigned jobs = 1) {
    return only(check_axioms(mu, jobs), "smallness");
}

inline json to_json(const axiom_report& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json pair = json::array();
        if (!e.cell.empty()) pair.push_back(e.cell);
        pair.push_back(e.point);
        entries.push_back({{"pair", pair}, {"check", e.check}, {"pass", e.pass}, {"witness", e.witness}});
    }
    return {{"mu", r.mu.to_string()}, {"failures", r.failures()}, {"entries", entries}};
}

// The quadratic cone example: motivic Chern class of {z1 z2 - z3 z4 != 0} in
// C^4 with torus characters alpha*beta, alpha/beta, alpha*gamma, alpha/gamma.
inline variables cone_variables() { return variables({"alpha", "beta", "gamma"}); }

inline laurent_poly quadratic_cone_class() {
    return parse_laurent(
        "(1+y)^2*(alpha^-4*y^2 + (beta*alpha^-3 + gamma*alpha^-3 + alpha^-3*beta^-1 + alpha^-3*gamma^-1"
        " - alpha^-2 - alpha^-4)*y + alpha^-2)",
        cone_variables());
}

inline std::vector<exponent> quadratic_cone_characters() {
    return {exponent{1, 1, 0}, exponent{1, -1, 0}, exponent{1, 0, 1}, exponent{1, 0, -1}};
}

// e^K(nu_0) = prod (1 - chi^{-1}) over the four characters.
inline laurent_poly quadratic_cone_euler() {
    const variables v = cone_variables();
    laurent_poly r = laurent_poly::one(v);
    for (auto chi : quadratic_cone_characters()) {
        for (auto& x : chi) x = -x;
        r *= laurent_poly::one(v) - laurent_poly::monomial(v, chi);
    }
    return r;
}

// lim mC / e^K along the cocharacter (alpha, beta, gamma) -> xi^d.
inline ypoly quadratic_cone_limit(const cocharacter& d) {
    return limit_at_infinity(rational_expr(quadratic_cone_class(), quadratic_cone_euler()), d);
}

}  // namespace mcc
