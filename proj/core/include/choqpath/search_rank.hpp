#pragma once

#include <functional>

#include "choqpath/search.hpp"

namespace choqpath {

/// Ranking search: enumerates solution paths in non-decreasing scalarized
/// cost cp, keeps the best Choquet value seen as the incumbent and stops once
/// the scalarized bound of the selected label can no longer beat it.
///
/// Labels are attached to paths; every node holds at most one expanded,
/// not-yet-consumed label (the depth-first discipline), and nodes of an
/// emitted solution path are reopened so their pending labels become
/// selectable again. A node whose expansion produced no extensions, or whose
/// pending labels could still beat the incumbent when the search would
/// otherwise stop, is reopened as well; without that, pruning cyclic
/// extensions could strand a pending label forever.
///
/// scalar_heuristic must be an admissible per-node bound on the cp cost to
/// the goal set (see scalar_bound / apply_gamma). on_solution, when given, is
/// invoked for every emitted solution path in emission order.
///
/// Throws std::invalid_argument for precondition violations and
/// std::runtime_error if no solution path exists.
Solution solve_rank(
    const StateSpaceGraph& g, const Capacity& v, const DisutilityFn& w,
    const ProbabilityVector& p, std::span<const double> scalar_heuristic,
    const std::function<void(const Path&, const CostVector&, double cp)>& on_solution = {});

}  // namespace choqpath
