// simplex.hpp : a tiny exact-rational simplex solver.
//
// Instances in this library have at most a few dozen variables and at most
// n+1 <= 5 equality rows, so a dense two-phase tableau with Bland's rule is
// exact, terminating, and plenty fast. Nothing here is tuned for large LPs.
#pragma once

#include <cstddef>
#include <vector>

#include "lct/rational.hpp"

namespace lct::detail {

enum class lp_status { optimal, infeasible, unbounded };

struct lp_result {
    lp_status status = lp_status::infeasible;
    rational objective = 0;
    std::vector<rational> solution;  // values of the original variables
};

// min c.x  subject to  A x = b, x >= 0.
// A is row-major, m rows by n columns. b may have negative entries.
inline lp_result solve_lp(const std::vector<std::vector<rational>>& A,
                          std::vector<rational> b,
                          const std::vector<rational>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    // tableau: m rows of [original columns | artificial columns | rhs],
    // plus one cost row maintained by the same pivots.
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<rational>> t(m + 1, std::vector<rational>(cols, 0));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -A[i][j] : A[i][j];
        t[i][n + i] = 1;
        t[i][cols - 1] = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    auto pivot = [&](std::size_t row, std::size_t col) {
        const rational p = t[row][col];
        for (auto& v : t[row]) v /= p;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            const rational f = t[i][col];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    };

    // Bland's rule: smallest eligible entering column, then smallest basis
    // index among the ratio-test ties. Guarantees termination.
    auto run = [&](std::size_t allowed_cols) -> bool {
        for (;;) {
            std::size_t enter = allowed_cols;
            for (std::size_t j = 0; j < allowed_cols; ++j)
                if (t[m][j] < 0) { enter = j; break; }
            if (enter == allowed_cols) return true;  // optimal
            std::size_t leave = m;
            rational best = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                const rational ratio = t[i][cols - 1] / t[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false;  // unbounded
            pivot(leave, enter);
        }
    };

    // Phase 1: minimize the sum of artificials. Price the initial basis out.
    for (std::size_t j = 0; j < m; ++j) t[m][n + j] = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < cols; ++j) t[m][j] -= t[i][j];
    run(n);  // artificials may never re-enter
    lp_result res;
    if (t[m][cols - 1] != 0) {  // phase-1 objective is -(sum of artificials)
        res.status = lp_status::infeasible;
        return res;
    }
    // Drive leftover zero-valued artificials out of the basis where possible;
    // a row with no original-column pivot is a redundant constraint.
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (t[i][j] != 0) { pivot(i, j); break; }
    }

    // Phase 2: restore the real objective row.
    for (std::size_t j = 0; j < cols; ++j) t[m][j] = 0;
    for (std::size_t j = 0; j < n; ++j) t[m][j] = c[j];
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= n || t[m][basis[i]] == 0) continue;
        const rational f = t[m][basis[i]];
        for (std::size_t j = 0; j < cols; ++j) t[m][j] -= f * t[i][j];
    }
    if (!run(n)) {
        res.status = lp_status::unbounded;
        return res;
    }
    res.status = lp_status::optimal;
    res.objective = -t[m][cols - 1];
    res.solution.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.solution[basis[i]] = t[i][cols - 1];
    return res;
}

}  // namespace lct::detail
