#pragma once

// Multivariate Laurent polynomials over Z[y].
//
// A laurent_poly is a finite sum  sum_e c_e(y) x^e  over integer exponent
// vectors e, stored as a vector of terms sorted lexicographically by e with
// no zero coefficient. Two values over the same variable list are equal iff
// their term vectors are equal.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "errors.hpp"
#include "ypoly.hpp"

namespace mcc {

using exponent = boost::container::small_vector<int, 8>;

// Immutable, cheaply copyable list of variable names.
class variables {
public:
    variables() : names_(empty_list()) {}
    variables(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
        std::set<std::string> seen;
        for (const auto& n : *names_) {
            if (n.empty() || n == "y") throw invalid_input("invalid variable name '" + n + "'");
            if (!seen.insert(n).second) throw invalid_input("duplicate variable name '" + n + "'");
        }
    }
    variables(std::initializer_list<const char*> names)
        : variables(std::vector<std::string>(names.begin(), names.end())) {}

    std::size_t size() const { return names_->size(); }
    bool empty() const { return names_->empty(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == name) return i;
        return std::nullopt;
    }
    std::size_t require(std::string_view name) const {
        auto i = index_of(name);
        if (!i) throw invalid_input("unknown variable '" + std::string(name) + "'");
        return *i;
    }

    friend bool operator==(const variables& a, const variables& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const variables& a, const variables& b) { return !(a == b); }

private:
    static const std::shared_ptr<const std::vector<std::string>>& empty_list() {
        static const auto e = std::make_shared<const std::vector<std::string>>();
        return e;
    }

    std::shared_ptr<const std::vector<std::string>> names_;
};

struct term {
    exponent exp;
    ypoly coeff;

    friend bool operator==(const term& a, const term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
};

class laurent_poly {
public:
    laurent_poly() = default;
    explicit laurent_poly(variables vars) : vars_(std::move(vars)) {}

    static laurent_poly constant(variables vars, ypoly c) {
        laurent_poly p(std::move(vars));
        if (!c.is_zero()) p.terms_.push_back({exponent(p.vars_.size(), 0), std::move(c)});
        return p;
    }
    static laurent_poly one(variables vars) { return constant(std::move(vars), ypoly(1)); }
    static laurent_poly monomial(variables vars, exponent e, ypoly c = ypoly(1)) {
        laurent_poly p(std::move(vars));
        if (e.size() != p.vars_.size()) throw invalid_input("exponent length does not match variable count");
        if (!c.is_zero()) p.terms_.push_back({std::move(e), std::move(c)});
        return p;
    }
    static laurent_poly variable(variables vars, std::string_view name, int power = 1) {
        exponent e(vars.size(), 0);
        e[vars.require(name)] = power;
        return monomial(std::move(vars), std::move(e));
    }
    // Parameter y as a polynomial over the given variables.
    static laurent_poly y(variables vars) { return constant(std::move(vars), ypoly{0, 1}); }

    // Canonicalizes an arbitrary list of terms (merging repeated exponents).
    static laurent_poly from_terms(variables vars, std::vector<term> ts) {
        laurent_poly p(std::move(vars));
        for (const auto& t : ts)
            if (t.exp.size() != p.vars_.size()) throw invalid_input("exponent length does not match variable count");
        p.terms_ = std::move(ts);
        p.canonicalize();
        return p;
    }

    const variables& vars() const { return vars_; }
    const std::vector<term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    // Coefficient of x^e (zero if absent).
    ypoly coeff(const exponent& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const term& t, const exponent& k) { return t.exp < k; });
        if (it != terms_.end() && it->exp == e) return it->coeff;
        return {};
    }
    // The y-polynomial multiplying x^0.
    ypoly constant_term() const { return coeff(exponent(vars_.size(), 0)); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(),
                                                  [](int e) { return e == 0; }));
    }

    laurent_poly& operator+=(const laurent_poly& o) { return *this = combine(*this, o, false); }
    laurent_poly& operator-=(const laurent_poly& o) { return *this = combine(*this, o, true); }
    laurent_poly& operator*=(const laurent_poly& o) { return *this = *this * o; }

    laurent_poly operator-() const {
        laurent_poly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend laurent_poly operator+(const laurent_poly& a, const laurent_poly& b) { return combine(a, b, false); }
    friend laurent_poly operator-(const laurent_poly& a, const laurent_poly& b) { return combine(a, b, true); }

    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
        check_same(a, b);
        laurent_poly r(a.vars_);
        if (a.is_zero() || b.is_zero()) return r;
        const laurent_poly& small = a.size() <= b.size() ? a : b;
        const laurent_poly& large = a.size() <= b.size() ? b : a;
        if (small.size() == 1) {
            // Monomial times polynomial keeps the lexicographic order.
            const auto& s = small.terms_[0];
            r.terms_.reserve(large.size());
            for (const auto& t : large.terms_) {
                term u{t.exp, t.coeff * s.coeff};
                for (std::size_t i = 0; i < u.exp.size(); ++i) u.exp[i] += s.exp[i];
                r.terms_.push_back(std::move(u));
            }
            return r;
        }
        r.terms_.reserve(a.size() * b.size());
        for (const auto& s : small.terms_)
            for (const auto& t : large.terms_) {
                term u{t.exp, t.coeff * s.coeff};
                for (std::size_t i = 0; i < u.exp.size(); ++i) u.exp[i] += s.exp[i];
                r.terms_.push_back(std::move(u));
            }
        r.canonicalize();
        return r;
    }

    friend laurent_poly operator*(const laurent_poly& a, const ypoly& s) {
        laurent_poly r = a;
        if (s.is_zero()) {
            r.terms_.clear();
            return r;
        }
        for (auto& t : r.terms_) t.coeff = t.coeff * s;
        return r;
    }
    friend laurent_poly operator*(const ypoly& s, const laurent_poly& a) { return a * s; }

    friend bool operator==(const laurent_poly& a, const laurent_poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const laurent_poly& a, const laurent_poly& b) { return !(a == b); }

    laurent_poly pow(unsigned k) const {
        laurent_poly r = one(vars_);
        laurent_poly base = *this;
        while (k) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return r;
    }

    // Multiplication by the monomial x^e.
    laurent_poly shifted(const exponent& e) const {
        laurent_poly r = *this;
        for (auto& t : r.terms_)
            for (std::size_t i = 0; i < e.size(); ++i) t.exp[i] += e[i];
        return r;
    }

    // Exponent-wise minimum over the support; zero vector for the zero polynomial.
    exponent min_exponent() const {
        exponent m(vars_.size(), 0);
        if (terms_.empty()) return m;
        m = terms_[0].exp;
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exp[i]);
        return m;
    }

    int min_degree_in(std::size_t v) const {
        int m = 0;
        bool first = true;
        for (const auto& t : terms_) {
            if (first || t.exp[v] < m) m = t.exp[v];
            first = false;
        }
        return m;
    }
    int max_degree_in(std::size_t v) const {
        int m = 0;
        bool first = true;
        for (const auto& t : terms_) {
            if (first || t.exp[v] > m) m = t.exp[v];
            first = false;
        }
        return m;
    }

    // Sum over x^e of c_e(y): the image under x_i -> 1.
    ypoly collapse() const {
        ypoly r;
        for (const auto& t : terms_) r += t.coeff;
        return r;
    }

    // Highest power of y occurring; -1 for zero.
    int y_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.coeff.degree());
        return d;
    }

    // Same polynomial read over a larger (or reordered) variable list that
    // contains every variable of this one.
    laurent_poly embed(const variables& target) const {
        if (target == vars_) return *this;
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) pos[i] = target.require(vars_[i]);
        std::vector<term> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) {
            exponent e(target.size(), 0);
            for (std::size_t i = 0; i < pos.size(); ++i) e[pos[i]] = t.exp[i];
            ts.push_back({std::move(e), t.coeff});
        }
        return from_terms(target, std::move(ts));
    }

    // Permutes variables: variable i of the result is variable perm[i] of this.
    laurent_poly permute_variables(const std::vector<std::size_t>& perm) const {
        std::vector<term> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) {
            exponent e(vars_.size(), 0);
            for (std::size_t i = 0; i < perm.size(); ++i) e[i] = t.exp[perm[i]];
            ts.push_back({std::move(e), t.coeff});
        }
        return from_terms(vars_, std::move(ts));
    }

    static void check_same(const laurent_poly& a, const laurent_poly& b) {
        if (a.vars_ != b.vars_) throw invalid_input("laurent_poly operands have different variable lists");
    }

private:
    static laurent_poly combine(const laurent_poly& a, const laurent_poly& b, bool subtract) {
        check_same(a, b);
        laurent_poly r(a.vars_);
        r.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->exp < i->exp) {
                r.terms_.push_back(subtract ? term{j->exp, -j->coeff} : *j);
                ++j;
            } else {
                ypoly c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
                if (!c.is_zero()) r.terms_.push_back({i->exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const term& a, const term& b) { return a.exp < b.exp; });
        std::vector<term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().exp == t.exp)
                out.back().coeff += t.coeff;
            else {
                if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        terms_ = std::move(out);
    }

    variables vars_;
    std::vector<term> terms_;
};

// Exponent vectors with nonzero coefficient, y treated as a constant.
inline std::vector<exponent> support(const laurent_poly& p) {
    std::vector<exponent> s;
    s.reserve(p.size());
    for (const auto& t : p.terms()) s.push_back(t.exp);
    return s;
}

// Image of a source variable under a monomial substitution: scalar * x^exp
// over the target variables.
struct monomial_image {
    big_int scalar = 1;
    exponent exp;
};

// Ring homomorphism sending every variable to a scalar multiple of a Laurent
// monomial.
class monomial_substitution {
public:
    monomial_substitution(variables source, variables target)
        : source_(std::move(source)), target_(std::move(target)), images_(source_.size()) {
        // Default: identity on shared names, unset otherwise.
        for (std::size_t i = 0; i < source_.size(); ++i) {
            if (auto j = target_.index_of(source_[i])) {
                images_[i] = monomial_image{1, exponent(target_.size(), 0)};
                images_[i]->exp[*j] = 1;
            }
        }
    }

    monomial_substitution& set(std::string_view source_var, monomial_image img) {
        if (img.exp.size() != target_.size()) throw invalid_input("image exponent has wrong length");
        images_[source_.require(source_var)] = std::move(img);
        return *this;
    }
    // source_var -> target_var
    monomial_substitution& set(std::string_view source_var, std::string_view target_var) {
        exponent e(target_.size(), 0);
        e[target_.require(target_var)] = 1;
        return set(source_var, monomial_image{1, std::move(e)});
    }
    // source_var -> scalar * target monomial given as a laurent_poly monomial.
    monomial_substitution& set(std::string_view source_var, const laurent_poly& mono) {
        if (mono.vars() != target_) throw invalid_input("image lives over the wrong variables");
        if (mono.is_zero()) return set(source_var, monomial_image{0, exponent(target_.size(), 0)});
        if (!mono.is_monomial() || !mono.terms()[0].coeff.is_constant())
            throw invalid_input("substitution image must be a scalar multiple of a monomial");
        return set(source_var, monomial_image{mono.terms()[0].coeff.coeff(0), mono.terms()[0].exp});
    }

    const variables& source() const { return source_; }
    const variables& target() const { return target_; }

    laurent_poly apply(const laurent_poly& p) const {
        if (p.vars() != source_) throw invalid_input("substitution applied to polynomial over other variables");
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (!images_[i]) {
                bool used = std::any_of(p.terms().begin(), p.terms().end(),
                                        [&](const term& t) { return t.exp[i] != 0; });
                if (used) throw invalid_input("no image given for variable '" + source_[i] + "'");
            }
        std::vector<term> ts;
        ts.reserve(p.size());
        for (const auto& t : p.terms()) {
            exponent e(target_.size(), 0);
            big_int num = 1;
            big_int den = 1;
            bool zero = false;
            for (std::size_t i = 0; i < images_.size(); ++i) {
                int k = t.exp[i];
                if (k == 0) continue;
                const auto& img = *images_[i];
                if (img.scalar == 0) {
                    if (k < 0) throw invalid_input("substitution divides by zero");
                    zero = true;
                    break;
                }
                for (std::size_t j = 0; j < e.size(); ++j) e[j] += k * img.exp[j];
                if (img.scalar != 1) {
                    if (k > 0)
                        num *= boost::multiprecision::pow(img.scalar, static_cast<unsigned>(k));
                    else
                        den *= boost::multiprecision::pow(img.scalar, static_cast<unsigned>(-k));
                }
            }
            if (zero) continue;
            ypoly c = t.coeff;
            c *= num;
            if (den != 1) {
                auto q = c.divide_exact(ypoly(den));
                if (!q) throw invalid_input("substitution produces a non-integral coefficient");
                c = std::move(*q);
            }
            ts.push_back({std::move(e), std::move(c)});
        }
        return laurent_poly::from_terms(target_, std::move(ts));
    }

private:
    variables source_;
    variables target_;
    std::vector<std::optional<monomial_image>> images_;
};

inline laurent_poly monomial_substitute(const laurent_poly& p, const monomial_substitution& s) {
    return s.apply(p);
}

}  // namespace mcc
