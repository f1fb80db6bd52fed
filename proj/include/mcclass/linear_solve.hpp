#pragma once

// Exact solution of integer linear systems by fraction-free (Bareiss)
// elimination.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ypoly.hpp"

namespace mcc {

using integer_matrix = std::vector<std::vector<big_int>>;

enum class solve_status { unique, none, non_unique };

struct solve_result {
    solve_status status;
    std::size_t rank;
    std::vector<big_rational> x;  // set when unique
};

// Row echelon form of [A | b] in place; returns the pivot columns.
inline std::vector<std::size_t> bareiss_echelon(integer_matrix& M) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    std::vector<std::size_t> pivots;
    big_int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                big_int v = M[r][c] * M[i][j] - M[i][c] * M[r][j];
                big_int q, rem;
                boost::multiprecision::divide_qr(v, prev, q, rem);
                if (rem != 0) throw computation_error("inexact Bareiss step");
                M[i][j] = std::move(q);
            }
            M[i][c] = 0;
        }
        prev = M[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Solves A x = b.
inline solve_result solve_exact(const integer_matrix& A, const std::vector<big_int>& b) {
    const std::size_t rows = A.size();
    if (b.size() != rows) throw invalid_input("right-hand side has the wrong length");
    const std::size_t n = rows ? A[0].size() : 0;
    integer_matrix M(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (A[i].size() != n) throw invalid_input("ragged matrix");
        M[i] = A[i];
        M[i].push_back(b[i]);
    }
    auto pivots = bareiss_echelon(M);
    solve_result res{solve_status::unique, pivots.size(), {}};
    if (!pivots.empty() && pivots.back() == n) {
        res.status = solve_status::none;
        --res.rank;
        return res;
    }
    if (pivots.size() < n) {
        res.status = solve_status::non_unique;
        return res;
    }
    res.x.assign(n, big_rational(0));
    for (std::size_t k = n; k-- > 0;) {
        big_rational s = big_rational(M[k][n]);
        for (std::size_t j = k + 1; j < n; ++j) s -= big_rational(M[k][j]) * res.x[j];
        res.x[k] = s / big_rational(M[k][k]);
    }
    return res;
}

}  // namespace mcc
