#pragma once

// Exact division in Z[y][x_1^{+-1}, ..., x_r^{+-1}].
//
// The divisor is viewed as a univariate Laurent polynomial in one of its
// variables with coefficients in the remaining ones; long division from the
// top degree recurses on the leading coefficients and must leave no remainder.

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent_poly.hpp"

namespace mcc {

class non_divisible : public computation_error {
public:
    explicit non_divisible(laurent_poly remainder)
        : computation_error("polynomial is not divisible"), remainder_(std::move(remainder)) {}
    const laurent_poly& remainder() const { return remainder_; }

private:
    laurent_poly remainder_;
};

namespace detail {

// Terms of p whose exponent in v equals k, with that exponent cleared.
inline laurent_poly slice(const laurent_poly& p, std::size_t v, int k) {
    std::vector<term> ts;
    for (const auto& t : p.terms())
        if (t.exp[v] == k) {
            term u = t;
            u.exp[v] = 0;
            ts.push_back(std::move(u));
        }
    return laurent_poly::from_terms(p.vars(), std::move(ts));
}

inline std::optional<laurent_poly> divide_by_monomial(const laurent_poly& p, const term& m) {
    std::vector<term> ts;
    ts.reserve(p.size());
    for (const auto& t : p.terms()) {
        auto q = t.coeff.divide_exact(m.coeff);
        if (!q) return std::nullopt;
        term u{t.exp, std::move(*q)};
        for (std::size_t i = 0; i < u.exp.size(); ++i) u.exp[i] -= m.exp[i];
        ts.push_back(std::move(u));
    }
    return laurent_poly::from_terms(p.vars(), std::move(ts));
}

// Returns the quotient, or the offending remainder through *rem.
inline std::optional<laurent_poly> try_divide(const laurent_poly& p, const laurent_poly& q, laurent_poly* rem) {
    if (q.is_zero()) throw invalid_input("division by the zero polynomial");
    laurent_poly::check_same(p, q);
    if (p.is_zero()) return p;
    if (q.is_monomial()) {
        auto r = divide_by_monomial(p, q.terms()[0]);
        if (!r && rem) *rem = p;
        return r;
    }
    // A variable in which q is not homogeneous; one exists since q has >= 2 terms.
    std::size_t v = 0;
    int lo = 0, hi = 0;
    for (; v < q.vars().size(); ++v) {
        lo = q.min_degree_in(v);
        hi = q.max_degree_in(v);
        if (lo != hi) break;
    }
    const laurent_poly lead = slice(q, v, hi);
    const int span = hi - lo;

    laurent_poly r = p;
    laurent_poly quotient(p.vars());
    while (!r.is_zero()) {
        int rhi = r.max_degree_in(v);
        int rlo = r.min_degree_in(v);
        if (rhi - rlo < span) {
            if (rem) *rem = r;
            return std::nullopt;
        }
        auto c = try_divide(slice(r, v, rhi), lead, nullptr);
        if (!c) {
            if (rem) *rem = r;
            return std::nullopt;
        }
        exponent shift(p.vars().size(), 0);
        shift[v] = rhi - hi;
        laurent_poly step = c->shifted(shift);
        r -= step * q;
        quotient += step;
    }
    return quotient;
}

}  // namespace detail

// r with r * q == p exactly; throws non_divisible carrying the remainder.
inline laurent_poly exact_divide(const laurent_poly& p, const laurent_poly& q) {
    laurent_poly rem(p.vars());
    auto r = detail::try_divide(p, q, &rem);
    if (!r) throw non_divisible(std::move(rem));
    return std::move(*r);
}

inline std::optional<laurent_poly> try_exact_divide(const laurent_poly& p, const laurent_poly& q) {
    return detail::try_divide(p, q, nullptr);
}

inline bool divides(const laurent_poly& q, const laurent_poly& p) { return try_exact_divide(p, q).has_value(); }

}  // namespace mcc
