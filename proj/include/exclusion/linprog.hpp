#pragma once

#include <optional>
#include <vector>

namespace exclusion {

// Dense phase-1 simplex feasibility: find t with A t = b and t >= lb,
// or report infeasibility. Bland's rule throughout, so the iteration
// terminates on degenerate instances. Dimensions are capped at 128.
std::optional<std::vector<double>> lp_feasible(const std::vector<std::vector<double>>& a,
                                               const std::vector<double>& b,
                                               const std::vector<double>& lb);

}  // namespace exclusion
