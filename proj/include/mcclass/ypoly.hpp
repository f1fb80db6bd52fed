#pragma once

// Dense univariate polynomials in the distinguished parameter y with
// arbitrary-precision integer coefficients.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace mcc {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;
// Most coefficients have low y-degree, so a few slots are stored inline.
using coeff_vector = boost::container::small_vector<big_int, 3>;

class ypoly {
public:
    ypoly() = default;
    ypoly(long long c0) {
        if (c0 != 0) c_.emplace_back(c0);
    }
    ypoly(big_int c0) {
        if (c0 != 0) c_.push_back(std::move(c0));
    }
    ypoly(std::initializer_list<long long> coeffs) {
        for (auto c : coeffs) c_.emplace_back(c);
        trim();
    }
    explicit ypoly(const std::vector<big_int>& coeffs) : c_(coeffs.begin(), coeffs.end()) { trim(); }
    explicit ypoly(coeff_vector coeffs) : c_(std::move(coeffs)) { trim(); }

    // y^k
    static ypoly power_of_y(std::size_t k, big_int c = 1) {
        ypoly r;
        if (c == 0) return r;
        r.c_.resize(k + 1);
        r.c_[k] = std::move(c);
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const coeff_vector& coeffs() const { return c_; }

    big_int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : big_int(0); }
    const big_int& leading() const { return c_.back(); }

    bool is_constant() const { return c_.size() <= 1; }
    bool is_single_term() const {
        return !c_.empty() && std::count_if(c_.begin(), c_.end(), [](const big_int& c) { return c != 0; }) == 1;
    }

    ypoly& operator+=(const ypoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    ypoly& operator-=(const ypoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    ypoly& operator*=(const ypoly& o) {
        *this = *this * o;
        return *this;
    }
    ypoly& operator*=(const big_int& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }
    ypoly operator-() const {
        ypoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend ypoly operator+(ypoly a, const ypoly& b) { return a += b; }
    friend ypoly operator-(ypoly a, const ypoly& b) { return a -= b; }
    friend ypoly operator*(const ypoly& a, const ypoly& b) {
        ypoly r;
        if (a.is_zero() || b.is_zero()) return r;
        if (a.c_.size() == 1 && b.c_.size() == 1) {
            r.c_.push_back(a.c_[0] * b.c_[0]);
            return r;
        }
        r.c_.assign(a.c_.size() + b.c_.size() - 1, big_int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend bool operator==(const ypoly& a, const ypoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ypoly& a, const ypoly& b) { return !(a == b); }

    // Exact quotient over Z[y]; nullopt when d does not divide *this.
    std::optional<ypoly> divide_exact(const ypoly& d) const {
        if (d.is_zero()) return std::nullopt;
        if (is_zero()) return ypoly{};
        if (d.c_.size() == 1) {
            ypoly q;
            q.c_.reserve(c_.size());
            for (const auto& c : c_) {
                if (c % d.c_[0] != 0) return std::nullopt;
                q.c_.push_back(c / d.c_[0]);
            }
            return q;
        }
        if (degree() < d.degree()) return std::nullopt;
        coeff_vector r = c_;
        coeff_vector q(c_.size() - d.c_.size() + 1);
        const auto& lc = d.c_.back();
        for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
            auto& top = r[k + d.c_.size() - 1];
            if (top == 0) continue;
            if (top % lc != 0) return std::nullopt;
            big_int t = top / lc;
            for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= t * d.c_[j];
            q[k] = std::move(t);
        }
        for (const auto& c : r)
            if (c != 0) return std::nullopt;
        return ypoly(std::move(q));
    }

    big_int evaluate(const big_int& y) const {
        big_int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
        return acc;
    }

    // Sign of every nonzero coefficient: +1 / -1 when uniform, 0 when mixed or zero.
    int uniform_sign() const {
        int s = 0;
        for (const auto& c : c_) {
            if (c == 0) continue;
            int cs = c > 0 ? 1 : -1;
            if (s == 0)
                s = cs;
            else if (s != cs)
                return 0;
        }
        return s;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const auto& c = c_[k];
            if (c == 0) continue;
            big_int a = abs(c);
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            if (k == 0 || a != 1) out += a.str();
            if (k > 0) {
                if (a != 1) out += "*";
                out += "y";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    coeff_vector c_;
};

}  // namespace mcc
