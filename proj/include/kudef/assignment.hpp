#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

namespace kudef {

struct Assignment {
    std::vector<int> row_to_col;
    double cost = 0;
};

// Minimal-cost perfect matching on a square cost matrix: shortest
// augmenting paths with dual potentials, O(n^3). Exact in the usual
// floating-point sense; intended for the small multisets handled here.
inline Assignment solve_assignment(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("solve_assignment: cost matrix must be square");
    if (n == 0) return {};

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0);  // column -> row, 1-based; 0 is the virtual start
    std::vector<int> way(n + 1, 0);

    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = match[j0];
            double delta = kInf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
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
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Assignment out;
    out.row_to_col.assign(n, -1);
    for (int j = 1; j <= n; ++j) out.row_to_col[match[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) out.cost += cost[i][out.row_to_col[i]];
    return out;
}

}  // namespace kudef
