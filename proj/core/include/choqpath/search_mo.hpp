#pragma once

#include "choqpath/heuristics.hpp"
#include "choqpath/search.hpp"

namespace choqpath {

struct MoOptions {
  /// Strict Pareto-dominance pruning between labels at the same node.
  bool use_rule1 = true;
  /// Bound pruning against the incumbent: a label is discarded when
  /// max{psi(f), w(cp(P) + hbar(n))} is not below the incumbent value.
  /// Also controls the early-stop test on the selected label.
  bool use_rule2 = true;
  /// Replaces Rule 1 by keeping only the single best-psi(g) label per node.
  /// This deliberately wrong pruning exists to demonstrate why per-node label
  /// retention is required; it can return suboptimal values.
  bool naive_psi_pruning = false;
};

/// Label-based multiobjective best-first search for a path minimizing the
/// Choquet expected disutility.
///
/// Requires a concave capacity, a convex disutility, a scalarization vector p
/// inside core(dual(v)) and admissible heuristic tables (built for the same
/// p). Ties in the selection key break by smaller psi(f), then shorter path,
/// then creation order. Extensions onto a node already on the label's own
/// path are not generated; with nonnegative costs and an increasing
/// disutility a simple optimal path always exists.
///
/// Throws std::invalid_argument for precondition violations and
/// std::runtime_error if no solution path exists.
Solution solve_mo(const StateSpaceGraph& g, const Capacity& v, const DisutilityFn& w,
                  const ProbabilityVector& p, const HeuristicTables& h,
                  const MoOptions& options = {});

}  // namespace choqpath
