#include "litbench/assignment.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>

namespace litbench {

// Potentials-based Hungarian method on a square cost matrix (minimization of
// negated weights, with zero-cost padding when the input is rectangular).
std::vector<int> max_weight_assignment(
    const std::vector<std::vector<double>>& weight) {
    const std::size_t rows = weight.size();
    std::size_t cols = 0;
    for (const auto& row : weight) {
        if (!cols) cols = row.size();
        if (row.size() != cols) {
            throw std::invalid_argument("weight matrix rows differ in length");
        }
    }
    if (rows == 0 || cols == 0) return std::vector<int>(rows, -1);

    const std::size_t n = std::max(rows, cols);
    const auto cost = [&](std::size_t i, std::size_t j) -> double {
        if (i >= rows || j >= cols) return 0.0;
        return -weight[i][j];
    };

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0);
    std::vector<double> v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0);  // column -> row, 1-based
    std::vector<std::size_t> way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> row_match(rows, -1);
    for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t i = match[j];
        if (i >= 1 && i <= rows && j <= cols) {
            row_match[i - 1] = static_cast<int>(j - 1);
        }
    }
    return row_match;
}

}  // namespace litbench
