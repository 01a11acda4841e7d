#pragma once

#include <vector>

namespace litbench {

// Maximum-total-weight one-to-one assignment over an n x m weight matrix
// (rows need not equal columns; weights must be finite). Exact O(max(n,m)^3)
// Hungarian method with potentials. Returns one column index per row, or -1
// for rows left unassigned when m < n. Callers that consider zero-weight
// pairings meaningless should filter them from the result.
std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weight);

}  // namespace litbench
