#pragma once

// Lattice polytopes given by generators; membership is decided by an exact LP.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent_poly.hpp"
#include "lp.hpp"

namespace mcc {

using lattice_point = std::vector<int>;
using rational_point = std::vector<big_rational>;

class zero_polynomial : public computation_error {
public:
    zero_polynomial() : computation_error("Newton polytope of the zero polynomial") {}
};

class lattice_polytope {
public:
    lattice_polytope(std::size_t dim, std::vector<lattice_point> points) : dim_(dim), points_(std::move(points)) {
        for (const auto& p : points_)
            if (p.size() != dim_) throw invalid_input("generator has the wrong dimension");
        std::sort(points_.begin(), points_.end());
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    }

    std::size_t dim() const { return dim_; }
    const std::vector<lattice_point>& points() const { return points_; }
    bool empty() const { return points_.empty(); }

    friend bool operator==(const lattice_polytope& a, const lattice_polytope& b) {
        return a.dim_ == b.dim_ && a.points_ == b.points_;
    }

private:
    std::size_t dim_;
    std::vector<lattice_point> points_;
};

inline lattice_polytope newton_polytope(const laurent_poly& p) {
    if (p.is_zero()) throw zero_polynomial();
    std::vector<lattice_point> pts;
    for (const auto& e : support(p)) pts.emplace_back(e.begin(), e.end());
    return lattice_polytope(p.vars().size(), std::move(pts));
}

// x in conv(points), decided by feasibility of a convex combination.
inline bool contains_point(const std::vector<lattice_point>& points, const rational_point& x) {
    if (points.empty()) return false;
    const std::size_t d = x.size();
    // Bounding box rejection before the LP.
    for (std::size_t k = 0; k < d; ++k) {
        int lo = points[0][k], hi = points[0][k];
        for (const auto& p : points) {
            lo = std::min(lo, p[k]);
            hi = std::max(hi, p[k]);
        }
        if (x[k] < lo || x[k] > hi) return false;
    }
    for (const auto& p : points) {
        bool same = true;
        for (std::size_t k = 0; k < d && same; ++k) same = x[k] == p[k];
        if (same) return true;
    }
    rational_matrix A(d + 1, std::vector<big_rational>(points.size()));
    std::vector<big_rational> b(d + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t k = 0; k < d; ++k) A[k][i] = points[i][k];
        A[d][i] = 1;
    }
    for (std::size_t k = 0; k < d; ++k) b[k] = x[k];
    b[d] = 1;
    return feasible_point(std::move(A), std::move(b)).has_value();
}

inline rational_point to_rational(const lattice_point& x) { return rational_point(x.begin(), x.end()); }

inline bool contains_point(const lattice_polytope& P, const rational_point& x) {
    if (x.size() != P.dim()) throw invalid_input("point has the wrong dimension");
    return contains_point(P.points(), x);
}
inline bool contains_point(const lattice_polytope& P, const lattice_point& x) {
    return contains_point(P, to_rational(x));
}

// conv(A) inside conv(B); returns the first generator of A outside B, if any.
inline std::optional<lattice_point> containment_witness(const lattice_polytope& A, const lattice_polytope& B) {
    if (A.dim() != B.dim()) throw invalid_input("polytopes of different dimension");
    for (const auto& a : A.points())
        if (!contains_point(B, a)) return a;
    return std::nullopt;
}

inline bool polytope_contained(const lattice_polytope& A, const lattice_polytope& B) {
    return !containment_witness(A, B).has_value();
}

// x lies in conv(P) but not in the hull of the other generators.
inline bool is_vertex(const lattice_polytope& P, const lattice_point& x) {
    if (!contains_point(P, x)) return false;
    std::vector<lattice_point> rest;
    for (const auto& p : P.points())
        if (p != x) rest.push_back(p);
    return !contains_point(rest, to_rational(x));
}

// Generators that are vertices of the hull.
inline lattice_polytope vertices(const lattice_polytope& P) {
    std::vector<lattice_point> vs;
    for (const auto& p : P.points())
        if (is_vertex(P, p)) vs.push_back(p);
    return lattice_polytope(P.dim(), std::move(vs));
}

inline lattice_polytope minkowski_sum(const lattice_polytope& A, const lattice_polytope& B) {
    if (A.dim() != B.dim()) throw invalid_input("polytopes of different dimension");
    std::vector<lattice_point> pts;
    pts.reserve(A.points().size() * B.points().size());
    for (const auto& a : A.points())
        for (const auto& b : B.points()) {
            lattice_point s(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
            pts.push_back(std::move(s));
        }
    return lattice_polytope(A.dim(), std::move(pts));
}

inline std::string to_string(const lattice_point& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

}  // namespace mcc
