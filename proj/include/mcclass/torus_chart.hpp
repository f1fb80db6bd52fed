#pragma once

// Where the torus variables t1..tn land when fixed-point values are computed.
// The identity chart keeps every t_i; a cocharacter chart sends t_i to xi^{d_i}
// with distinct d_i, so every nonzero difference t_a - t_b stays nonzero and
// exact division remains valid in the smaller ring.

#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent_poly.hpp"

namespace mcc {

inline variables torus_variables(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    return variables(std::move(names));
}

class torus_chart {
public:
    static torus_chart identity(int n) {
        torus_chart c;
        c.n_ = n;
        c.target_ = torus_variables(n);
        for (int i = 0; i < n; ++i) {
            exponent e(static_cast<std::size_t>(n), 0);
            e[i] = 1;
            c.images_.push_back(std::move(e));
        }
        return c;
    }

    // t_i -> xi^{d_i}; the weights must be pairwise distinct.
    static torus_chart cocharacter(const std::vector<int>& d) {
        if (std::set<int>(d.begin(), d.end()).size() != d.size())
            throw invalid_input("cocharacter weights must be pairwise distinct");
        torus_chart c;
        c.n_ = static_cast<int>(d.size());
        c.target_ = variables({"xi"});
        for (int w : d) c.images_.push_back(exponent{w});
        return c;
    }

    // d = (0, 1, ..., n-1).
    static torus_chart generic_cocharacter(int n) {
        std::vector<int> d;
        for (int i = 0; i < n; ++i) d.push_back(i);
        return cocharacter(d);
    }

    int n() const { return n_; }
    bool is_identity() const { return target_ == torus_variables(n_); }
    const variables& target() const { return target_; }
    // Exponent of the image of t_i, 1-based i.
    const exponent& image(int i) const { return images_[i - 1]; }

    // Image of t_x / t_z.
    exponent ratio(int x, int z) const {
        exponent e = images_[x - 1];
        const exponent& f = images_[z - 1];
        for (std::size_t k = 0; k < e.size(); ++k) e[k] -= f[k];
        return e;
    }

    laurent_poly monomial(const exponent& e, ypoly c = ypoly(1)) const {
        return laurent_poly::monomial(target_, e, std::move(c));
    }
    laurent_poly one() const { return laurent_poly::one(target_); }

    // Image of a polynomial in t1..tn.
    laurent_poly apply(const laurent_poly& p) const {
        if (is_identity()) return p.embed(target_);
        monomial_substitution s(torus_variables(n_), target_);
        for (int i = 1; i <= n_; ++i) s.set("t" + std::to_string(i), monomial_image{1, images_[i - 1]});
        return s.apply(p.embed(torus_variables(n_)));
    }

private:
    int n_ = 0;
    variables target_;
    std::vector<exponent> images_;
};

}  // namespace mcc
