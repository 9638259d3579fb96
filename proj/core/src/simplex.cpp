#include "qmac/simplex.hpp"

#include <cmath>
#include <limits>

namespace qmac {

namespace {
constexpr double kTol = 1e-11;
}

std::optional<LpResult> solve_covering_lp(const std::vector<std::vector<double>>& columns,
                                          const std::vector<double>& b,
                                          const std::vector<double>& costs) {
    const int m = static_cast<int>(b.size());
    const int nx = static_cast<int>(columns.size());
    const int ns = nx + m;       // first artificial index
    const int total = nx + 2 * m;

    std::vector<std::vector<double>> t(m, std::vector<double>(total, 0.0));
    std::vector<double> rhs = b;
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < nx; ++j) t[r][j] = columns[j][r];
        t[r][nx + r] = -1.0;  // surplus
        t[r][ns + r] = 1.0;   // artificial
        basis[r] = ns + r;    // b >= 0, so the artificial basis is feasible
    }

    auto pivot = [&](int leave, int enter) {
        const double piv = t[leave][enter];
        for (int j = 0; j < total; ++j) t[leave][j] /= piv;
        rhs[leave] /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == leave) continue;
            const double f = t[r][enter];
            if (f == 0.0) continue;
            for (int j = 0; j < total; ++j) t[r][j] -= f * t[leave][j];
            rhs[r] -= f * rhs[leave];
            if (rhs[r] < 0.0 && rhs[r] > -kTol) rhs[r] = 0.0;
        }
        basis[leave] = enter;
    };

    auto reduced_cost = [&](const std::vector<double>& c, int j) {
        double rc = c[j];
        for (int r = 0; r < m; ++r) rc -= c[basis[r]] * t[r][j];
        return rc;
    };

    // Bland's rule on both the entering and leaving choice: no cycling.
    auto optimize = [&](const std::vector<double>& c, int active) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < active; ++j) {
                if (reduced_cost(c, j) < -kTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return;
            int leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int r = 0; r < m; ++r) {
                if (t[r][enter] <= kTol) continue;
                const double ratio = rhs[r] / t[r][enter];
                if (ratio < best - kTol ||
                    (ratio < best + kTol && (leave < 0 || basis[r] < basis[leave]))) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave < 0) return;  // unbounded; impossible for these objectives
            pivot(leave, enter);
        }
    };

    // Phase 1: drive the artificials to zero.
    std::vector<double> c1(total, 0.0);
    for (int r = 0; r < m; ++r) c1[ns + r] = 1.0;
    optimize(c1, total);
    double infeasibility = 0.0;
    for (int r = 0; r < m; ++r)
        if (basis[r] >= ns) infeasibility += rhs[r];
    if (infeasibility > 1e-8) return std::nullopt;

    // Kick still-basic artificials out where a structural pivot exists;
    // rows without one are redundant and stay parked at zero.
    for (int r = 0; r < m; ++r) {
        if (basis[r] < ns) continue;
        for (int j = 0; j < ns; ++j) {
            if (std::fabs(t[r][j]) > kTol) {
                pivot(r, j);
                break;
            }
        }
    }

    // Phase 2 over structural + surplus columns only.
    std::vector<double> c2(total, 0.0);
    for (int j = 0; j < nx; ++j) c2[j] = costs[j];
    optimize(c2, ns);

    LpResult out;
    out.x.assign(nx, 0.0);
    for (int r = 0; r < m; ++r)
        if (basis[r] < nx) out.x[basis[r]] = rhs[r];
    out.objective = 0.0;
    for (int j = 0; j < nx; ++j) out.objective += costs[j] * out.x[j];
    out.duals.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
        const double y = reduced_cost(c2, nx + i);
        out.duals[i] = y > 0.0 ? y : 0.0;
    }
    return out;
}

}  // namespace qmac
