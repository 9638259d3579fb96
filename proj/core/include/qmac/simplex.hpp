#ifndef QMAC_SIMPLEX_HPP
#define QMAC_SIMPLEX_HPP

#include <optional>
#include <vector>

namespace qmac {

// Minimal dense two-phase simplex for the capacity LP.
//
//   minimize c.x  subject to  A x >= b,  x >= 0
//
// Uses Bland's rule, so it terminates on the degenerate covering instances
// the graph module produces. Instances here are tiny (rows = n <= 20).
struct LpResult {
    double objective = 0.0;
    std::vector<double> x;
    std::vector<double> duals;  // one per row, >= 0
};

// Returns nullopt if infeasible (cannot happen for the covering LP, where
// singletons always cover).
std::optional<LpResult> solve_covering_lp(const std::vector<std::vector<double>>& columns,
                                          const std::vector<double>& b,
                                          const std::vector<double>& costs);

}  // namespace qmac

#endif  // QMAC_SIMPLEX_HPP
