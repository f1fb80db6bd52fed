#pragma once

// Weight functions W_I, the modified versions W~_I = W_I / c_mu and
// W^_I = W_I / c'_mu, and their values at torus fixed points.
//
// Variables: alpha^{(j)}_a is named "a<j>_<a>" for j < N; the last group is
// t1..tn. The fixed point of Fl_mu coded by J sends the set {alpha^{(j)}_a}
// to {t_i : i in J^{(j)}}.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "combi.hpp"
#include "division.hpp"
#include "errors.hpp"
#include "laurent_poly.hpp"
#include "parallel.hpp"
#include "rational_expr.hpp"
#include "torus_chart.hpp"

namespace mcc {

class variable_panel {
public:
    explicit variable_panel(composition mu) : mu_(std::move(mu)) {
        std::vector<std::string> names;
        const int N = mu_.blocks();
        offset_.assign(static_cast<std::size_t>(N) + 1, 0);
        for (int j = 1; j <= N; ++j) {
            offset_[j - 1] = names.size();
            for (int a = 1; a <= mu_.partial(j); ++a)
                names.push_back(j < N ? "a" + std::to_string(j) + "_" + std::to_string(a) : "t" + std::to_string(a));
        }
        offset_[N] = names.size();
        vars_ = variables(std::move(names));
    }

    const composition& mu() const { return mu_; }
    const variables& vars() const { return vars_; }
    int groups() const { return mu_.blocks(); }
    int group_size(int j) const { return mu_.partial(j); }

    std::size_t index(int j, int a) const { return offset_[j - 1] + static_cast<std::size_t>(a - 1); }
    const std::string& name(int j, int a) const { return vars_[index(j, a)]; }

    // alpha^{(j)}_a / alpha^{(k)}_b
    exponent ratio(int j, int a, int k, int b) const {
        exponent e(vars_.size(), 0);
        e[index(j, a)] += 1;
        e[index(k, b)] -= 1;
        return e;
    }
    laurent_poly monomial(exponent e, ypoly c = ypoly(1)) const {
        return laurent_poly::monomial(vars_, std::move(e), std::move(c));
    }
    laurent_poly variable(int j, int a) const {
        exponent e(vars_.size(), 0);
        e[index(j, a)] = 1;
        return monomial(std::move(e));
    }

private:
    composition mu_;
    variables vars_;
    std::vector<std::size_t> offset_;
};

// Which of the three forms the factor psi_{I,j,a,b} takes.
enum class psi_case {
    below,  // i^{(j+1)}_b < i^{(j)}_a : 1 - xi
    equal,  // i^{(j+1)}_b = i^{(j)}_a : (1 + y) xi
    above,  // i^{(j+1)}_b > i^{(j)}_a : 1 + y xi
};

inline psi_case psi_factor(const index_tuple& I, int j, int a, int b) {
    int lower = I.union_upto(j)[a - 1];
    int upper = I.union_upto(j + 1)[b - 1];
    if (upper < lower) return psi_case::below;
    if (upper == lower) return psi_case::equal;
    return psi_case::above;
}

// psi evaluated at the monomial xi = x^e (with coefficient ring of vars).
inline laurent_poly apply_psi(psi_case c, const variables& vars, const exponent& e) {
    laurent_poly xi = laurent_poly::monomial(vars, e);
    switch (c) {
        case psi_case::below:
            return laurent_poly::one(vars) - xi;
        case psi_case::equal:
            return xi * ypoly{1, 1};
        case psi_case::above:
            break;
    }
    return laurent_poly::one(vars) + xi * ypoly{0, 1};
}

namespace detail {

// prod_{j<N} prod_{a<b} (alpha_a + y alpha_b) and prod_{j<N} prod_{a<b} (alpha_a - alpha_b).
inline std::pair<laurent_poly, laurent_poly> q_and_delta(const variable_panel& P) {
    laurent_poly q = laurent_poly::one(P.vars());
    laurent_poly delta = laurent_poly::one(P.vars());
    const laurent_poly y = laurent_poly::y(P.vars());
    for (int j = 1; j < P.groups(); ++j)
        for (int a = 1; a <= P.group_size(j); ++a)
            for (int b = a + 1; b <= P.group_size(j); ++b) {
                q *= P.variable(j, a) + y * P.variable(j, b);
                delta *= P.variable(j, a) - P.variable(j, b);
            }
    return {q, delta};
}

inline laurent_poly psi_product(const variable_panel& P, const index_tuple& I) {
    laurent_poly r = laurent_poly::one(P.vars());
    for (int j = 1; j < P.groups(); ++j)
        for (int a = 1; a <= P.group_size(j); ++a)
            for (int b = 1; b <= P.group_size(j + 1); ++b)
                r *= apply_psi(psi_factor(I, j, a, b), P.vars(), P.ratio(j, a, j + 1, b));
    return r;
}

inline int permutation_sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t k = i + 1; k < p.size(); ++k)
            if (p[i] > p[k]) s = -s;
    return s;
}

}  // namespace detail

// U_I as a quotient of Laurent polynomials over the panel variables.
inline rational_expr u_term(const index_tuple& I) {
    variable_panel P(I.mu());
    laurent_poly num = detail::psi_product(P, I);
    laurent_poly den = laurent_poly::one(P.vars());
    for (int j = 1; j < P.groups(); ++j)
        for (int a = 1; a <= P.group_size(j); ++a)
            for (int b = a + 1; b <= P.group_size(j); ++b) {
                exponent r = P.ratio(j, b, j, a);
                num *= laurent_poly::one(P.vars()) + P.monomial(r, ypoly{0, 1});
                den *= laurent_poly::one(P.vars()) - P.monomial(r);
            }
    return rational_expr(std::move(num), std::move(den));
}

// W_I = sum over sigma of U_I(sigma alpha), placed over the common denominator
// prod (alpha_a - alpha_b) and divided exactly.
inline laurent_poly weight_function(const index_tuple& I) {
    variable_panel P(I.mu());
    auto [q, delta] = detail::q_and_delta(P);
    const laurent_poly base = detail::psi_product(P, I) * q;

    std::vector<std::vector<int>> sigma;
    for (int j = 1; j < P.groups(); ++j) {
        std::vector<int> s(static_cast<std::size_t>(P.group_size(j)));
        std::iota(s.begin(), s.end(), 1);
        sigma.push_back(std::move(s));
    }
    laurent_poly sum(P.vars());
    std::vector<std::size_t> perm(P.vars().size());
    std::iota(perm.begin(), perm.end(), 0);
    // Odometer over the product of symmetric groups.
    for (;;) {
        int sign = 1;
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            sign *= detail::permutation_sign(sigma[j]);
            for (int a = 1; a <= P.group_size(static_cast<int>(j) + 1); ++a)
                perm[P.index(static_cast<int>(j) + 1, a)] = P.index(static_cast<int>(j) + 1, sigma[j][a - 1]);
        }
        laurent_poly t = base.permute_variables(perm);
        if (sign > 0)
            sum += t;
        else
            sum -= t;
        std::size_t j = 0;
        while (j < sigma.size() && !std::next_permutation(sigma[j].begin(), sigma[j].end())) ++j;
        if (j == sigma.size()) break;
    }
    return exact_divide(sum, delta);
}

struct chern_pair {
    laurent_poly c;        // c_mu
    laurent_poly c_prime;  // c'_mu
};

inline chern_pair chern_products(const composition& mu) {
    variable_panel P(mu);
    laurent_poly c = laurent_poly::one(P.vars());
    laurent_poly cp = laurent_poly::one(P.vars());
    const laurent_poly one = laurent_poly::one(P.vars());
    for (int j = 1; j < P.groups(); ++j) {
        for (int a = 1; a <= P.group_size(j); ++a)
            for (int b = 1; b <= P.group_size(j); ++b) c *= one + P.monomial(P.ratio(j, b, j, a), ypoly{0, 1});
        for (int a = 1; a <= P.group_size(j + 1); ++a)
            for (int b = 1; b <= P.group_size(j); ++b) cp *= one + P.monomial(P.ratio(j, b, j + 1, a), ypoly{0, 1});
    }
    return {std::move(c), std::move(cp)};
}

// Substitution alpha^{(j)}_a -> image of t_{J^{(j)}_a}.
inline monomial_substitution fixed_point_substitution(const variable_panel& P, const index_tuple& J,
                                                      const torus_chart& chart) {
    if (!(J.mu() == P.mu())) throw invalid_input("fixed point has a different composition");
    monomial_substitution s(P.vars(), chart.target());
    for (int j = 1; j <= P.groups(); ++j) {
        const auto& x = j < P.groups() ? J.union_upto(j) : J.union_upto(P.groups());
        for (int a = 1; a <= P.group_size(j); ++a) s.set(P.name(j, a), monomial_image{1, chart.image(x[a - 1])});
    }
    return s;
}

// A class over the panel variables, symmetric in each alpha block, at J.
inline laurent_poly restrict_to_fixed_point(const laurent_poly& w, const index_tuple& J, const torus_chart& chart) {
    variable_panel P(J.mu());
    return fixed_point_substitution(P, J, chart).apply(w);
}

enum class weight_kind { plain, modified };

// W_I|_J or W~_I|_J through the global weight function (slow route).
inline laurent_poly restrict_global(const index_tuple& I, const index_tuple& J, weight_kind kind,
                                    const torus_chart& chart) {
    laurent_poly w = restrict_to_fixed_point(weight_function(I), J, chart);
    if (kind == weight_kind::plain) return w;
    return exact_divide(w, restrict_to_fixed_point(chern_products(I.mu()).c, J, chart));
}

namespace detail {

// Fixed-point data shared by every I for one J.
struct fixed_point_context {
    const torus_chart* chart;
    composition mu;
    // x[j][a]: image index of alpha^{(j)}_a under the unpermuted substitution.
    std::vector<std::vector<int>> x;
    laurent_poly delta;     // Delta|_J
    laurent_poly c;         // c_mu|_J
    laurent_poly c_prime;   // c'_mu|_J
};

inline laurent_poly binomial(const torus_chart& chart, const exponent& e, const ypoly& c0, const ypoly& c1) {
    return chart.monomial(exponent(e.size(), 0), c0) + chart.monomial(e, c1);
}

inline fixed_point_context make_context(const index_tuple& J, const torus_chart& chart) {
    fixed_point_context ctx{&chart, J.mu(), {}, chart.one(), chart.one(), chart.one()};
    const int N = J.blocks();
    ctx.x.resize(static_cast<std::size_t>(N) + 1);
    for (int j = 1; j <= N; ++j) ctx.x[j] = J.union_upto(j);
    const ypoly y{0, 1};
    for (int j = 1; j < N; ++j) {
        const auto& x = ctx.x[j];
        const int m = static_cast<int>(x.size());
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                ctx.delta *= chart.monomial(chart.image(x[a])) - chart.monomial(chart.image(x[b]));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) ctx.c *= binomial(chart, chart.ratio(x[b], x[a]), 1, y);
        for (int a : ctx.x[j + 1])
            for (int b : x) ctx.c_prime *= binomial(chart, chart.ratio(b, a), 1, y);
    }
    return ctx;
}

// sum_sigma sgn(sigma) (psi-product * Q)(sigma alpha)|_J, by depth-first search
// over the blocks of sigma from the top group down. Assignments that hit a
// vanishing factor 1 - t_x/t_x are skipped.
inline laurent_poly restricted_numerator(const index_tuple& I, const fixed_point_context& ctx) {
    const torus_chart& chart = *ctx.chart;
    const int N = I.blocks();
    const ypoly y{0, 1};
    const ypoly one_plus_y{1, 1};
    laurent_poly total(chart.target());
    if (N == 1) return chart.one();

    // assign[j][a] = torus index that alpha^{(j)}_a is sent to.
    std::vector<std::vector<int>> assign(static_cast<std::size_t>(N) + 1);
    assign[N] = ctx.x[N];

    auto level = [&](auto&& self, int j, int sign, const laurent_poly& acc) -> void {
        if (j == 0) {
            if (sign > 0)
                total += acc;
            else
                total -= acc;
            return;
        }
        const auto& x = ctx.x[j];
        const int m = static_cast<int>(x.size());
        const int mm = static_cast<int>(assign[j + 1].size());
        std::vector<int> perm(static_cast<std::size_t>(m));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<psi_case> pc(static_cast<std::size_t>(m * mm));
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= mm; ++b) pc[(a - 1) * mm + (b - 1)] = psi_factor(I, j, a, b);

        assign[j].assign(static_cast<std::size_t>(m), 0);
        do {
            bool zero = false;
            for (int a = 0; a < m && !zero; ++a) {
                assign[j][a] = x[perm[a]];
                for (int b = 0; b < mm; ++b)
                    if (pc[a * mm + b] == psi_case::below && assign[j + 1][b] == assign[j][a]) {
                        zero = true;
                        break;
                    }
            }
            if (zero) continue;
            laurent_poly f = acc;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < mm; ++b) {
                    exponent r = chart.ratio(assign[j][a], assign[j + 1][b]);
                    switch (pc[a * mm + b]) {
                        case psi_case::below:
                            f *= binomial(chart, r, 1, -1);
                            break;
                        case psi_case::equal:
                            f *= chart.monomial(r, one_plus_y);
                            break;
                        case psi_case::above:
                            f *= binomial(chart, r, 1, y);
                            break;
                    }
                }
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    f *= chart.monomial(chart.image(assign[j][a])) + chart.monomial(chart.image(assign[j][b]), y);
            self(self, j - 1, sign * permutation_sign(perm), f);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    level(level, N - 1, 1, chart.one());
    return total;
}

}  // namespace detail

// W_I|_J or W~_I|_J by restricting each symmetrizer term first (fast route).
inline laurent_poly restricted_weight(const index_tuple& I, const index_tuple& J, weight_kind kind,
                                      const torus_chart& chart) {
    if (!(I.mu() == J.mu())) throw invalid_input("index tuples have different compositions");
    auto ctx = detail::make_context(J, chart);
    laurent_poly w = exact_divide(detail::restricted_numerator(I, ctx), ctx.delta);
    if (kind == weight_kind::plain) return w;
    return exact_divide(w, ctx.c);
}

// W^_I|_J = W_I|_J / c'_mu|_J, which need not be a Laurent polynomial.
inline rational_expr restricted_hat_weight(const index_tuple& I, const index_tuple& J, const torus_chart& chart) {
    auto ctx = detail::make_context(J, chart);
    laurent_poly w = exact_divide(detail::restricted_numerator(I, ctx), ctx.delta);
    return rational_expr(std::move(w), ctx.c_prime);
}

// A tangent weight t_x / t_z of Fl_mu at a fixed point; normal to the cell of
// the point when z > x.
struct tangent_weight {
    int x;
    int z;
    bool normal;
};

// For blocks j < k, z in J_j and x in J_k contribute t_x / t_z.
inline std::vector<tangent_weight> tangent_weights(const index_tuple& J) {
    std::vector<tangent_weight> out;
    for (int j = 1; j <= J.blocks(); ++j)
        for (int k = j + 1; k <= J.blocks(); ++k)
            for (int z : J.block(j))
                for (int x : J.block(k)) out.push_back({x, z, z > x});
    return out;
}

// prod (1 - chi^{-1}) over the selected weights.
inline laurent_poly k_euler(const std::vector<tangent_weight>& ws, const torus_chart& chart) {
    laurent_poly r = chart.one();
    for (const auto& w : ws) r *= detail::binomial(chart, chart.ratio(w.z, w.x), 1, -1);
    return r;
}

// prod (1 + y chi^{-1}) over the selected weights.
inline laurent_poly k_chern(const std::vector<tangent_weight>& ws, const torus_chart& chart) {
    laurent_poly r = chart.one();
    for (const auto& w : ws) r *= detail::binomial(chart, chart.ratio(w.z, w.x), 1, ypoly{0, 1});
    return r;
}

// lambda_y(T* Fl_mu)|_J.
inline laurent_poly total_lambda_y(const index_tuple& J, const torus_chart& chart) {
    return k_chern(tangent_weights(J), chart);
}

// Values of a class at every fixed point of Fl_mu.
struct localized_class {
    composition mu;
    std::vector<index_tuple> points;
    std::vector<laurent_poly> values;

    const laurent_poly& at(const index_tuple& J) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == J) return values[i];
        throw invalid_input("no fixed point " + J.to_string());
    }
};

// Row I of the result holds W_I (or W~_I) at every fixed point; rows and
// columns follow enumerate_index_tuples.
inline std::vector<localized_class> localization_table(const composition& mu, weight_kind kind,
                                                       const torus_chart& chart, unsigned jobs = 1) {
    const auto tuples = enumerate_index_tuples(mu);
    const std::size_t m = tuples.size();
    auto contexts = parallel_map(m, jobs, [&](std::size_t k) { return detail::make_context(tuples[k], chart); });
    auto cells = parallel_map(m * m, jobs, [&](std::size_t k) {
        const auto& I = tuples[k / m];
        const auto& ctx = contexts[k % m];
        laurent_poly w = exact_divide(detail::restricted_numerator(I, ctx), ctx.delta);
        return kind == weight_kind::plain ? w : exact_divide(w, ctx.c);
    });
    std::vector<localized_class> out;
    for (std::size_t i = 0; i < m; ++i) {
        localized_class row{mu, tuples, {}};
        for (std::size_t k = 0; k < m; ++k) row.values.push_back(std::move(cells[i * m + k]));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace mcc
