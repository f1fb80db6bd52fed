#pragma once

// Exact feasibility of  A x = b, x >= 0  over the rationals: phase one of the
// simplex method with Bland's rule, so it always terminates.

#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "ypoly.hpp"

namespace mcc {

using rational_matrix = std::vector<std::vector<big_rational>>;

// A feasible x, or nullopt when none exists.
inline std::optional<std::vector<big_rational>> feasible_point(rational_matrix A, std::vector<big_rational> b) {
    const std::size_t rows = A.size();
    if (b.size() != rows) throw invalid_input("right-hand side has the wrong length");
    const std::size_t cols = rows ? A[0].size() : 0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (A[r].size() != cols) throw invalid_input("ragged constraint matrix");
        if (b[r] < 0) {
            for (auto& a : A[r]) a = -a;
            b[r] = -b[r];
        }
    }
    // Columns: original, then one artificial per row, then the right-hand side.
    const std::size_t width = cols + rows + 1;
    rational_matrix T(rows, std::vector<big_rational>(width));
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) T[r][c] = A[r][c];
        T[r][cols + r] = 1;
        T[r][width - 1] = b[r];
        basis[r] = cols + r;
    }
    // Reduced costs of the objective "sum of artificials".
    std::vector<big_rational> cost(width);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < width; ++c)
            if (c < cols || c == width - 1) cost[c] -= T[r][c];

    for (;;) {
        std::size_t enter = width;
        for (std::size_t c = 0; c + 1 < width; ++c)
            if (cost[c] < 0) {
                enter = c;
                break;
            }
        if (enter == width) break;
        std::size_t leave = rows;
        big_rational best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (T[r][enter] <= 0) continue;
            big_rational ratio = T[r][width - 1] / T[r][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded direction; cannot happen for phase one
        big_rational p = T[leave][enter];
        for (auto& v : T[leave]) v /= p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            big_rational f = T[r][enter];
            for (std::size_t c = 0; c < width; ++c) T[r][c] -= f * T[leave][c];
        }
        if (cost[enter] != 0) {
            big_rational f = cost[enter];
            for (std::size_t c = 0; c < width; ++c) cost[c] -= f * T[leave][c];
        }
        basis[leave] = enter;
    }
    if (cost[width - 1] != 0) return std::nullopt;
    std::vector<big_rational> x(cols);
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] < cols) x[basis[r]] = T[r][width - 1];
    return x;
}

}  // namespace mcc
