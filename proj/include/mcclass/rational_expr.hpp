#pragma once

#include <string>
#include <utility>
#include <vector>

#include "division.hpp"
#include "errors.hpp"
#include "laurent_poly.hpp"

namespace mcc {

// Quotient num/den of Laurent polynomials. The monomial content of den is
// moved into num so that den has exponent-wise minimum zero. No gcd is ever
// taken; cancellation happens only through exact division.
class rational_expr {
public:
    rational_expr(laurent_poly num, laurent_poly den) : num_(std::move(num)), den_(std::move(den)) {
        laurent_poly::check_same(num_, den_);
        if (den_.is_zero()) throw invalid_input("rational expression with zero denominator");
        normalize();
    }
    explicit rational_expr(laurent_poly p) : rational_expr(p, laurent_poly::one(p.vars())) {}

    const laurent_poly& num() const { return num_; }
    const laurent_poly& den() const { return den_; }
    const variables& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }

    // The Laurent polynomial num/den; throws non_divisible otherwise.
    laurent_poly to_laurent() const { return exact_divide(num_, den_); }

    friend rational_expr operator*(const rational_expr& a, const rational_expr& b) {
        return rational_expr(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational_expr operator/(const rational_expr& a, const rational_expr& b) {
        if (b.is_zero()) throw invalid_input("division by zero rational expression");
        return rational_expr(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend rational_expr operator+(const rational_expr& a, const rational_expr& b) {
        if (a.den_ == b.den_) return rational_expr(a.num_ + b.num_, a.den_);
        return rational_expr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    // Equality of the represented functions (cross multiplication).
    friend bool equivalent(const rational_expr& a, const rational_expr& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    rational_expr substitute(const monomial_substitution& s) const {
        laurent_poly d = s.apply(den_);
        if (d.is_zero()) throw invalid_input("substitution annihilates the denominator");
        return rational_expr(s.apply(num_), std::move(d));
    }

private:
    void normalize() {
        exponent m = den_.min_exponent();
        for (auto& x : m) x = -x;
        den_ = den_.shifted(m);
        num_ = num_.shifted(m);
    }

    laurent_poly num_;
    laurent_poly den_;
};

// One-parameter subgroup tau_i -> xi^{d_i}.
struct cocharacter {
    std::vector<int> weights;
};

class infinite_limit : public computation_error {
public:
    infinite_limit() : computation_error("limit is infinite") {}
};

namespace detail {

inline monomial_substitution cocharacter_substitution(const variables& source, const cocharacter& d) {
    if (d.weights.size() != source.size())
        throw invalid_input("cocharacter length does not match the variable count");
    variables xi({"xi"});
    monomial_substitution s(source, xi);
    for (std::size_t i = 0; i < source.size(); ++i) s.set(source[i], monomial_image{1, exponent{d.weights[i]}});
    return s;
}

}  // namespace detail

// lim_{xi -> infinity} f(xi^{d}) as a polynomial in y.
inline ypoly limit_at_infinity(const rational_expr& f, const cocharacter& d) {
    auto s = detail::cocharacter_substitution(f.vars(), d);
    laurent_poly num = s.apply(f.num());
    laurent_poly den = s.apply(f.den());
    if (den.is_zero()) throw invalid_input("denominator vanishes on the cocharacter");
    if (num.is_zero()) return {};
    int dn = num.max_degree_in(0);
    int dd = den.max_degree_in(0);
    if (dn < dd) return {};
    if (dn > dd) throw infinite_limit();
    ypoly a = num.terms().back().coeff;
    ypoly b = den.terms().back().coeff;
    auto q = a.divide_exact(b);
    if (!q) throw non_divisible(laurent_poly::constant(variables{}, a));
    return *q;
}

}  // namespace mcc
