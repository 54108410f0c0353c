#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace specbid {

namespace detail {

// Hungarian algorithm (potentials formulation), minimizing over a dense
// rows x cols cost matrix with rows <= cols. Every row is assigned.
// Returns col index per row.
inline std::vector<int> hungarian_min(const std::vector<double>& cost, int rows, int cols) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(rows + 1, 0.0), v(cols + 1, 0.0), minv(cols + 1);
    std::vector<int> p(cols + 1, 0), way(cols + 1, 0);
    for (int i = 1; i <= rows; ++i) {
        p[0] = i;
        int j0 = 0;
        minv.assign(cols + 1, inf);
        std::vector<char> used(cols + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= cols; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * cols + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= cols; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> col_of_row(rows, -1);
    for (int j = 1; j <= cols; ++j)
        if (p[j] != 0) col_of_row[p[j] - 1] = j - 1;
    return col_of_row;
}

}  // namespace detail

// Maximum-total-value one-to-one assignment on a dense rows x cols matrix of
// nonnegative values. min(rows, cols) pairs are matched; unmatched rows get
// -1. Deterministic for a given input.
inline std::vector<int> max_assignment(const std::vector<double>& value, int rows, int cols) {
    if (rows <= 0 || cols <= 0 || static_cast<int>(value.size()) != rows * cols)
        throw std::invalid_argument("max_assignment: bad matrix shape");

    std::vector<double> cost(value.size());
    if (rows <= cols) {
        for (std::size_t i = 0; i < value.size(); ++i) cost[i] = -value[i];
        return detail::hungarian_min(cost, rows, cols);
    }
    // More rows than columns: solve the transpose, then invert the matching.
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) cost[j * rows + i] = -value[i * cols + j];
    const std::vector<int> row_of_col = detail::hungarian_min(cost, cols, rows);
    std::vector<int> col_of_row(rows, -1);
    for (int j = 0; j < cols; ++j)
        if (row_of_col[j] >= 0) col_of_row[row_of_col[j]] = j;
    return col_of_row;
}

}  // namespace specbid
