#pragma once

#include "choqpath/capacity.hpp"
#include "choqpath/graph.hpp"

namespace choqpath {

/// Optimistic cost-to-go tables.
///
/// per_scenario is node-major (entry [n*m + i] bounds the cost from n to the
/// goal set under scenario i); scalar bounds the linearly scalarized cost.
/// Unreachable nodes carry +infinity. Exact tables (gamma = 1) are consistent
/// as well as admissible; scaling by gamma in (0,1] preserves both.
struct HeuristicTables {
  int m = 0;
  double gamma = 1.0;
  std::vector<double> per_scenario;
  std::vector<double> scalar;

  std::span<const double> vec(NodeId n) const {
    return {per_scenario.data() + static_cast<std::size_t>(n) * m,
            static_cast<std::size_t>(m)};
  }
  double bar(NodeId n) const { return scalar[static_cast<std::size_t>(n)]; }
};

/// Exact per-scenario cost-to-go: for every node and scenario, the cheapest
/// path cost to any goal (Dijkstra from the goal set on the reversed graph).
/// Node-major layout, +infinity where no goal is reachable.
std::vector<double> per_scenario_bounds(const StateSpaceGraph& g);

/// Exact cost-to-go under the scalarized arc costs sum_i p_i c(a, i).
std::vector<double> scalar_bound(const StateSpaceGraph& g, const ProbabilityVector& p);

/// Exact tables (gamma = 1) for both views.
HeuristicTables build_heuristic_tables(const StateSpaceGraph& g, const ProbabilityVector& p);

/// Scales every finite entry by gamma in (0,1]; weakening an admissible bound
/// keeps it admissible.
HeuristicTables apply_gamma(HeuristicTables tables, double gamma);

}  // namespace choqpath
