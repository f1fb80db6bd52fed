#pragma once

// Reading and writing Laurent polynomials as plain text such as
//   (1 + y)*t2/t1 - (t1/t2 + 1)*y + 1
// Division is exact division; '^' takes an integer exponent (negative allowed
// for monomials).

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "division.hpp"
#include "errors.hpp"
#include "laurent_poly.hpp"

namespace mcc {

namespace detail {

class expr_parser {
public:
    expr_parser(std::string_view text, variables vars) : s_(text), vars_(std::move(vars)) {}

    laurent_poly parse() {
        laurent_poly r = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw invalid_input("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    laurent_poly sum() {
        laurent_poly r = product();
        for (;;) {
            if (accept('+'))
                r += product();
            else if (accept('-'))
                r -= product();
            else
                return r;
        }
    }
    laurent_poly product() {
        laurent_poly r = unary();
        for (;;) {
            if (accept('*'))
                r *= unary();
            else if (accept('/'))
                r = exact_divide(r, unary());
            else
                return r;
        }
    }
    laurent_poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }
    laurent_poly power() {
        laurent_poly base = atom();
        if (!accept('^')) return base;
        bool paren = accept('(');
        bool neg = accept('-');
        skip();
        long long k = integer();
        if (paren && !accept(')')) fail("expected ')'");
        if (!neg) return base.pow(static_cast<unsigned>(k));
        if (!base.is_monomial()) fail("negative power of a non-monomial");
        return exact_divide(laurent_poly::one(vars_), base.pow(static_cast<unsigned>(k)));
    }
    long long integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }
    laurent_poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            laurent_poly r = sum();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return laurent_poly::constant(vars_, ypoly(big_int(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "y") return laurent_poly::y(vars_);
            if (!vars_.index_of(name)) fail("unknown variable '" + name + "'");
            return laurent_poly::variable(vars_, name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    variables vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline laurent_poly parse_laurent(std::string_view text, const variables& vars) {
    return detail::expr_parser(text, vars).parse();
}

// "t1^2/(t2*t3)", "1/t2", "1" for the empty monomial.
inline std::string format_monomial(const variables& vars, const exponent& e) {
    std::vector<std::string> up, down;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        std::string f = vars[i];
        int k = e[i] > 0 ? e[i] : -e[i];
        if (k > 1) f += "^" + std::to_string(k);
        (e[i] > 0 ? up : down).push_back(std::move(f));
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "*" : "") + v[i];
        return s;
    };
    std::string out = up.empty() ? "1" : join(up);
    if (!down.empty()) out += down.size() == 1 ? "/" + down[0] : "/(" + join(down) + ")";
    return out;
}

namespace detail {

inline bool is_unit_monomial(const exponent& e) {
    for (int x : e)
        if (x != 0) return false;
    return true;
}

// c * m with c an integer, appended to a running sum.
inline void append_signed(std::string& out, const big_int& c, const std::string& body, bool body_is_one) {
    big_int a = abs(c);
    if (out.empty())
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    if (body_is_one)
        out += a.str();
    else if (a == 1)
        out += body;
    else
        out += a.str() + "*" + body;
}

}  // namespace detail

// Canonical term order: "c(y)*monomial" summands.
inline std::string to_string(const laurent_poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        bool unit = detail::is_unit_monomial(t.exp);
        std::string mono = unit ? "" : format_monomial(p.vars(), t.exp);
        if (t.coeff.is_single_term()) {
            int k = t.coeff.degree();
            const big_int& c = t.coeff.leading();
            std::string body = mono;
            if (k > 0) {
                std::string yk = k == 1 ? "y" : "y^" + std::to_string(k);
                body = unit ? yk : mono + "*" + yk;
            }
            detail::append_signed(out, c, body, unit && k == 0);
        } else {
            std::string c = "(" + t.coeff.to_string() + ")";
            out += out.empty() ? "" : " + ";
            out += unit ? c : c + "*" + mono;
        }
    }
    return out;
}

// Grouped by descending powers of y:  (A_k)*y^k + ... + A_0  with A_k Laurent
// polynomials in the torus variables. A coefficient whose integer
// coefficients are all negative is printed as -( ... ).
inline std::string format_by_y(const laurent_poly& p) {
    if (p.is_zero()) return "0";
    int sign = 0;
    bool mixed = false;
    for (const auto& t : p.terms()) {
        int s = t.coeff.uniform_sign();
        if (s == 0 || (sign != 0 && s != sign)) mixed = true;
        sign = s;
    }
    if (!mixed && sign < 0) return "-(" + format_by_y(-p) + ")";

    std::map<int, std::vector<std::pair<exponent, big_int>>, std::greater<>> by_degree;
    for (const auto& t : p.terms())
        for (int k = 0; k <= t.coeff.degree(); ++k)
            if (t.coeff.coeffs()[k] != 0) by_degree[k].emplace_back(t.exp, t.coeff.coeffs()[k]);

    std::string out;
    for (const auto& [k, mons] : by_degree) {
        std::string group;
        // Constants last, as in hand-written expansions.
        for (auto it = mons.rbegin(); it != mons.rend(); ++it) {
            const auto& [e, c] = *it;
            bool unit = detail::is_unit_monomial(e);
            detail::append_signed(group, c, unit ? "" : format_monomial(p.vars(), e), unit);
        }
        bool single = mons.size() == 1;
        std::string yk = k == 0 ? "" : (k == 1 ? "y" : "y^" + std::to_string(k));
        std::string piece;
        if (k == 0)
            piece = group;
        else if (single && detail::is_unit_monomial(mons[0].first) && abs(mons[0].second) == 1)
            piece = (mons[0].second < 0 ? "-" : "") + yk;
        else if (single && abs(mons[0].second) == 1 && mons[0].second > 0)
            piece = group + "*" + yk;
        else
            piece = "(" + group + ")*" + yk;
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

}  // namespace mcc
