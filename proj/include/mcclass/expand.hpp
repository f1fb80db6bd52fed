#pragma once

// Expansion of motivic Chern classes of Schubert cells of Fl(n) in the basis
// [w] of structure sheaves of Schubert varieties, its specializations, and the
// sign and log-concavity checks on the coefficients.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combi.hpp"
#include "division.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "json_io.hpp"
#include "laurent_poly.hpp"
#include "parallel.hpp"
#include "torus_chart.hpp"
#include "weightfn.hpp"

namespace mcc {

class negative_ratio_exponent : public computation_error {
public:
    explicit negative_ratio_exponent(const std::string& what)
        : computation_error("coefficient needs a negative power of a ratio: " + what) {}
};

// [w]|_v for all w, v in S_n.
class basis_table {
public:
    basis_table(int n, const torus_chart& chart) : n_(n), perms_(all_permutations(n)) {
        for (std::size_t i = 0; i < perms_.size(); ++i) index_[perms_[i].word()] = i;
        const std::size_t m = perms_.size();
        values_.assign(m, std::vector<laurent_poly>(m, laurent_poly(chart.target())));

        // The point class is supported at w0 with value e^K of the full tangent space.
        const permutation w0 = permutation::longest(n);
        values_[index_of(w0)][index_of(w0)] = k_euler(tangent_weights(index_tuple::from_permutation(w0)), chart);

        auto order = permutations_by_length(n);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const permutation& u = *it;
            if (u == w0) continue;
            int i = 1;
            while (u(i) > u(i + 1)) ++i;
            // [u] = D_i [u s_i] with (D_i f)(v) = (f(v s_i) - chi f(v)) / (1 - chi), chi = t_{v(i+1)} / t_{v(i)}.
            const auto& f = values_[index_of(u.times_simple(i))];
            auto& g = values_[index_of(u)];
            for (std::size_t k = 0; k < m; ++k) {
                const permutation& v = perms_[k];
                laurent_poly chi = chart.monomial(chart.ratio(v(i + 1), v(i)));
                laurent_poly num = f[index_of(v.times_simple(i))] - chi * f[k];
                g[k] = exact_divide(num, chart.one() - chi);
            }
        }
    }

    int n() const { return n_; }
    const std::vector<permutation>& permutations() const { return perms_; }
    std::size_t index_of(const permutation& w) const {
        auto it = index_.find(w.word());
        if (it == index_.end()) throw invalid_input("permutation of the wrong size: " + w.to_string());
        return it->second;
    }
    const laurent_poly& at(const permutation& w, const permutation& v) const {
        return values_[index_of(w)][index_of(v)];
    }

private:
    int n_;
    std::vector<permutation> perms_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<std::vector<laurent_poly>> values_;
};

inline basis_table structure_sheaf_table(int n, const torus_chart& chart) { return basis_table(n, chart); }

// mC[p] = sum_w coeffs[k] [basis[k]], basis ordered by length, then lexicographically.
struct expansion {
    permutation p;
    std::vector<permutation> basis;
    std::vector<laurent_poly> coeffs;

    const laurent_poly& coeff(const permutation& w) const {
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (basis[k] == w) return coeffs[k];
        throw invalid_input("no basis element " + w.to_string());
    }
};

inline index_tuple cell_of(const permutation& p) { return index_tuple::from_permutation(p); }

inline int length_of_cell(const permutation& p) { return length(cell_of(p)); }

// Holds the torus chart and the [w] table for Fl(n).
class expander {
public:
    expander(int n, torus_chart chart, unsigned jobs = 1)
        : n_(n), chart_(std::move(chart)), jobs_(jobs), table_(n, chart_), order_(permutations_by_length(n)) {}

    int n() const { return n_; }
    const torus_chart& chart() const { return chart_; }
    const basis_table& table() const { return table_; }

    // W~ of the cell of p at every fixed point, in table order.
    std::vector<laurent_poly> restrictions(const permutation& p) const {
        const auto& vs = table_.permutations();
        const index_tuple I = cell_of(p);
        return parallel_map(vs.size(), jobs_, [&](std::size_t k) {
            return restricted_weight(I, cell_of(vs[k]), weight_kind::modified, chart_);
        });
    }

    // Solves W~_p|_v = sum_w c_w [w]|_v by back-substitution along `order`,
    // which must be a linear extension of the closure order.
    expansion expand(const permutation& p, const std::vector<permutation>& order) const {
        auto values = restrictions(p);
        expansion e{p, order_, std::vector<laurent_poly>(order_.size(), laurent_poly(chart_.target()))};
        std::vector<std::pair<std::size_t, laurent_poly>> found;  // table index, coefficient
        for (const auto& v : order) {
            const std::size_t kv = table_.index_of(v);
            laurent_poly r = values[kv];
            for (const auto& [kw, c] : found) r -= c * table_.at(table_.permutations()[kw], v);
            if (r.is_zero()) continue;
            laurent_poly c = exact_divide(r, table_.at(v, v));
            e.coeffs[position(v)] = c;
            found.emplace_back(kv, std::move(c));
        }
        return e;
    }
    expansion expand(const permutation& p) const { return expand(p, order_); }

    std::vector<expansion> expand_all() const {
        std::vector<expansion> out;
        for (const auto& p : order_) out.push_back(expand(p));
        return out;
    }

private:
    std::size_t position(const permutation& w) const {
        return static_cast<std::size_t>(std::find(order_.begin(), order_.end(), w) - order_.begin());
    }

    int n_;
    torus_chart chart_;
    unsigned jobs_;
    basis_table table_;
    std::vector<permutation> order_;
};

// tau_i -> 1 in every coefficient.
inline std::vector<ypoly> specialize_nonequivariant(const expansion& e) {
    std::vector<ypoly> out;
    for (const auto& c : e.coeffs) out.push_back(c.collapse());
    return out;
}

// Non-equivariant expansion computed over a one-parameter subgroup of
// pairwise distinct weights, then collapsed.
inline std::vector<ypoly> nonequivariant_expansion(const expander& ex, const permutation& p) {
    return specialize_nonequivariant(ex.expand(p));
}

inline bool strictly_log_concave(const ypoly& f) {
    const int d = f.degree();
    for (int k = 1; k < d; ++k)
        if (f.coeff(k) * f.coeff(k) <= f.coeff(k - 1) * f.coeff(k + 1)) return false;
    return true;
}

struct conjecture_violation {
    permutation p;
    permutation w;
    std::string detail;
};

struct conjecture_report {
    std::string name;
    int n;
    std::size_t checked;  // coefficients examined
    std::vector<conjecture_violation> violations;
};

// Every tau,y-monomial of the coefficient of [w] in mC[p] has sign (-1)^{l(p)-l(w)}.
inline void check_signs(const expansion& e, conjecture_report& rep) {
    const int lp = length_of_cell(e.p);
    for (std::size_t k = 0; k < e.basis.size(); ++k) {
        const laurent_poly& c = e.coeffs[k];
        if (c.is_zero()) continue;
        ++rep.checked;
        const int expected = (lp - length_of_cell(e.basis[k])) % 2 == 0 ? 1 : -1;
        bool ok = true;
        for (const auto& t : c.terms())
            for (int j = 0; j <= t.coeff.degree() && ok; ++j) {
                const big_int a = t.coeff.coeff(j);
                ok = a == 0 || (a > 0 ? 1 : -1) == expected;
            }
        if (!ok) rep.violations.push_back({e.p, e.basis[k], "coefficient " + to_string(c)});
    }
}

inline void check_log_concavity(const expansion& e, conjecture_report& rep) {
    auto ne = specialize_nonequivariant(e);
    for (std::size_t k = 0; k < ne.size(); ++k) {
        if (ne[k].is_zero()) continue;
        ++rep.checked;
        if (!strictly_log_concave(ne[k])) rep.violations.push_back({e.p, e.basis[k], ne[k].to_string()});
    }
}

inline conjecture_report check_sign_conjecture(const expander& ex) {
    conjecture_report rep{"sign", ex.n(), 0, {}};
    for (const auto& p : permutations_by_length(ex.n())) check_signs(ex.expand(p), rep);
    return rep;
}

inline conjecture_report check_log_concavity(const expander& ex) {
    conjecture_report rep{"log_concavity", ex.n(), 0, {}};
    for (const auto& p : permutations_by_length(ex.n())) check_log_concavity(ex.expand(p), rep);
    return rep;
}

// Variables s1..s_{n-1}, delta.
inline variables s_delta_variables(int n) {
    std::vector<std::string> names;
    for (int i = 1; i < n; ++i) names.push_back("s" + std::to_string(i));
    names.push_back("delta");
    return variables(std::move(names));
}

// tau_i / tau_{i+1} = 1 + s_i and y = -1 - delta. A tau-monomial of degree zero
// is prod r_i^{f_i} with f_i the partial sums of its exponent.
inline laurent_poly substitute_s_delta(const laurent_poly& c, int n) {
    const variables sv = s_delta_variables(n);
    laurent_poly out(sv);
    if (c.is_zero()) return out;
    if (c.vars() != torus_variables(n)) throw invalid_input("coefficient is not in t1..tn");
    const laurent_poly one = laurent_poly::one(sv);
    const laurent_poly minus_y = one + laurent_poly::variable(sv, "delta");  // -y
    for (const auto& t : c.terms()) {
        laurent_poly term = one;
        int f = 0;
        for (int i = 1; i < n; ++i) {
            f += t.exp[i - 1];
            if (f < 0) throw negative_ratio_exponent(format_monomial(c.vars(), t.exp));
            term *= (one + laurent_poly::variable(sv, "s" + std::to_string(i))).pow(static_cast<unsigned>(f));
        }
        if (f + t.exp[n - 1] != 0) throw invalid_input("coefficient is not of degree zero in t");
        laurent_poly yk(sv);
        for (int k = 0; k <= t.coeff.degree(); ++k) {
            if (t.coeff.coeff(k) == 0) continue;
            laurent_poly mk = minus_y.pow(static_cast<unsigned>(k));
            yk += (k % 2 == 0 ? mk : -mk) * laurent_poly::constant(sv, ypoly(std::vector<big_int>{t.coeff.coeff(k)}));
        }
        out += term * yk;
    }
    return out;
}

// Parity that fixes the expected sign of the s,delta-monomials in the
// coefficient of [w]: l(w) itself, or dim of the Schubert variety of w, which
// is l(w0) - l(w). The two agree when dim Fl(n) is even.
enum class s_delta_rule { length, dimension };

// Every s,delta-monomial of the coefficient of [w] has sign (-1)^{parity(w)}.
inline conjecture_report check_s_delta_signs(const expander& ex, s_delta_rule rule = s_delta_rule::length) {
    conjecture_report rep{rule == s_delta_rule::length ? "s_delta_sign" : "s_delta_sign_dimension", ex.n(), 0, {}};
    const int top = length_of_cell(permutation::longest(ex.n()));
    for (const auto& p : permutations_by_length(ex.n())) {
        auto e = ex.expand(p);
        for (std::size_t k = 0; k < e.basis.size(); ++k) {
            if (e.coeffs[k].is_zero()) continue;
            ++rep.checked;
            int parity = length_of_cell(e.basis[k]);
            if (rule == s_delta_rule::dimension) parity = top - parity;
            const int expected = parity % 2 == 0 ? 1 : -1;
            laurent_poly sd = substitute_s_delta(e.coeffs[k], ex.n());
            for (const auto& t : sd.terms()) {
                const big_int a = t.coeff.coeff(0);
                if ((a > 0 ? 1 : -1) != expected) {
                    rep.violations.push_back({p, e.basis[k], to_string(sd)});
                    break;
                }
            }
        }
    }
    return rep;
}

namespace detail {

// "(body)" or "-(body)" pieces of an expansion line.
inline std::pair<bool, std::string> signed_piece(std::string s) {
    bool negative = false;
    if (s[0] == '-') {
        negative = true;
        s = s.substr(1);
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    }
    if (s == "1") return {negative, ""};
    return {negative, "(" + s + ")"};
}

inline std::string bracket(const permutation& w) { return "[" + w.to_string() + "]"; }

inline std::string join_pieces(const std::vector<std::pair<std::pair<bool, std::string>, std::string>>& pieces) {
    std::string out;
    for (const auto& [piece, basis] : pieces) {
        const auto& [negative, body] = piece;
        if (out.empty())
            out = (negative ? "-" : "") + body + basis;
        else
            out += (negative ? " - " : " + ") + body + basis;
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

// mC[p] = (coeff)[w] + ... in basis order.
inline std::string format_expansion(const expansion& e) {
    std::vector<std::pair<std::pair<bool, std::string>, std::string>> pieces;
    for (std::size_t k = 0; k < e.basis.size(); ++k)
        if (!e.coeffs[k].is_zero())
            pieces.push_back({detail::signed_piece(format_by_y(e.coeffs[k])), detail::bracket(e.basis[k])});
    return "mC" + detail::bracket(e.p) + " = " + detail::join_pieces(pieces);
}

inline std::string format_nonequivariant(const permutation& p, const std::vector<permutation>& basis,
                                         const std::vector<ypoly>& coeffs) {
    std::vector<std::pair<std::pair<bool, std::string>, std::string>> pieces;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        int s = coeffs[k].uniform_sign();
        std::string body = (s < 0 ? -coeffs[k] : coeffs[k]).to_string();
        pieces.push_back({{s < 0, body == "1" ? "" : "(" + body + ")"}, detail::bracket(basis[k])});
    }
    return "mC" + detail::bracket(p) + " = " + detail::join_pieces(pieces);
}

inline json permutation_json(const permutation& w) { return json(w.word()); }

inline json to_json(const expansion& e) {
    json coeffs = json::array();
    for (std::size_t k = 0; k < e.basis.size(); ++k)
        if (!e.coeffs[k].is_zero())
            coeffs.push_back({{"w", permutation_json(e.basis[k])}, {"poly", to_string(e.coeffs[k])}});
    return {{"p", permutation_json(e.p)}, {"coeffs", coeffs}};
}

inline json to_json(const conjecture_report& r) {
    json v = json::array();
    for (const auto& x : r.violations)
        v.push_back({{"p", permutation_json(x.p)}, {"w", permutation_json(x.w)}, {"detail", x.detail}});
    return {{"conjecture", r.name}, {"n", r.n}, {"checked", r.checked}, {"violations", v}};
}

}  // namespace mcc
