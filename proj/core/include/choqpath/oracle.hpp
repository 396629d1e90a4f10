#pragma once

#include <cstdint>
#include <optional>

#include "choqpath/search.hpp"

namespace choqpath {

struct SolutionPathRecord {
  Path nodes;
  CostVector cost;
  double cp = 0.0;   // filled by annotate_report
  double psi = 0.0;  // filled by annotate_report
};

/// Every simple solution path of a desk-scale instance.
struct EnumerationReport {
  std::vector<SolutionPathRecord> paths;
};

/// Depth-first enumeration of all simple paths from the start node to the
/// goal set, arc-resolved so parallel arcs yield distinct records. Throws
/// std::runtime_error once more than `cap` paths are found; the oracle exists
/// only at desk scale.
EnumerationReport enumerate_solution_paths(const StateSpaceGraph& g,
                                           std::uint64_t cap = 1'000'000);

/// Fills cp (when p is given) and psi for every record.
void annotate_report(EnumerationReport& report, const Capacity& v, const DisutilityFn& w,
                     const ProbabilityVector* p = nullptr);

/// Ground-truth optimum by exhaustive enumeration; ties break toward the
/// lexicographically smallest node sequence. stats.paths_enumerated carries
/// the number of enumerated paths.
Solution brute_force_optimum(const StateSpaceGraph& g, const Capacity& v,
                             const DisutilityFn& w, std::uint64_t cap = 1'000'000);

/// Max-entropy reference by grid search over the simplex (m <= 3): the best
/// grid point at the given resolution that passes core_contains. Throws
/// std::runtime_error when no grid point lies in the core at that resolution.
ProbabilityVector core_grid_max_entropy(const Capacity& v, double resolution);

}  // namespace choqpath
