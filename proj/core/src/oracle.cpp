#include "choqpath/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace choqpath {

namespace {

struct Enumerator {
  const StateSpaceGraph& g;
  std::uint64_t cap;
  EnumerationReport report;
  Path stack;
  CostVector cost;
  std::vector<std::uint8_t> on_stack;

  explicit Enumerator(const StateSpaceGraph& graph, std::uint64_t limit)
      : g(graph),
        cap(limit),
        cost(static_cast<std::size_t>(graph.m()), 0.0),
        on_stack(static_cast<std::size_t>(graph.num_nodes()), 0) {}

  void visit(NodeId u) {
    stack.push_back(u);
    on_stack[static_cast<std::size_t>(u)] = 1;
    if (g.is_goal(u)) {
      if (report.paths.size() >= cap) {
        throw std::runtime_error(
            "enumerate_solution_paths: simple path count exceeds the cap; "
            "instance too large for the oracle");
      }
      report.paths.push_back({stack, cost, 0.0, 0.0});
    }
    for (const StateSpaceGraph::OutArc& oa : g.out_arcs(u)) {
      if (on_stack[static_cast<std::size_t>(oa.to)]) continue;
      const auto c = g.arc_cost(oa.arc);
      for (int i = 0; i < g.m(); ++i) cost[i] += c[i];
      visit(oa.to);
      for (int i = 0; i < g.m(); ++i) cost[i] -= c[i];
    }
    on_stack[static_cast<std::size_t>(u)] = 0;
    stack.pop_back();
  }
};

}  // namespace

EnumerationReport enumerate_solution_paths(const StateSpaceGraph& g, std::uint64_t cap) {
  Enumerator e(g, cap);
  e.visit(g.start());
  return std::move(e.report);
}

void annotate_report(EnumerationReport& report, const Capacity& v, const DisutilityFn& w,
                     const ProbabilityVector* p) {
  for (SolutionPathRecord& rec : report.paths) {
    rec.psi = ced(v, w, rec.cost);
    rec.cp = p ? scalarize(*p, rec.cost) : 0.0;
  }
}

Solution brute_force_optimum(const StateSpaceGraph& g, const Capacity& v,
                             const DisutilityFn& w, std::uint64_t cap) {
  const auto t0 = std::chrono::steady_clock::now();
  EnumerationReport report = enumerate_solution_paths(g, cap);
  if (report.paths.empty()) {
    throw std::runtime_error("brute_force_optimum: no solution path exists");
  }
  const SolutionPathRecord* best = nullptr;
  double best_psi = std::numeric_limits<double>::infinity();
  for (const SolutionPathRecord& rec : report.paths) {
    const double psi = ced(v, w, rec.cost);
    if (psi < best_psi || (psi == best_psi && best && rec.nodes < best->nodes)) {
      best_psi = psi;
      best = &rec;
    }
  }
  Solution sol;
  sol.psi = best_psi;
  sol.cost = best->cost;
  sol.path = best->nodes;
  sol.stats.paths_enumerated = report.paths.size();
  sol.stats.search_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

ProbabilityVector core_grid_max_entropy(const Capacity& v, double resolution) {
  const int m = v.m();
  if (m > 3) {
    throw std::invalid_argument("core_grid_max_entropy: grid oracle supports m <= 3");
  }
  if (!(resolution > 0.0) || resolution > 1.0) {
    throw std::invalid_argument("core_grid_max_entropy: resolution must lie in (0, 1]");
  }
  const int steps = static_cast<int>(std::lround(1.0 / resolution));
  double best_entropy = -1.0;
  std::optional<ProbabilityVector> best;
  double tol = kValueTolerance;

  const auto consider = [&](std::vector<double> p) {
    ProbabilityVector candidate(std::move(p));
    if (!core_contains(v, candidate, tol)) return;
    const double h = entropy(candidate);
    if (h > best_entropy) {
      best_entropy = h;
      best = std::move(candidate);
    }
  };
  const auto sweep = [&] {
    if (m == 1) {
      consider({1.0});
    } else if (m == 2) {
      for (int i = 0; i <= steps; ++i) {
        const double a = static_cast<double>(i) / steps;
        consider({a, 1.0 - a});
      }
    } else {
      for (int i = 0; i <= steps; ++i) {
        for (int j = 0; i + j <= steps; ++j) {
          const double a = static_cast<double>(i) / steps;
          const double b = static_cast<double>(j) / steps;
          consider({a, b, std::max(0.0, 1.0 - a - b)});
        }
      }
    }
  };

  // Prefer points strictly inside the core; when the core is thinner than the
  // grid (an exact equality constraint, say), accept the resolution-wide band
  // around it instead.
  sweep();
  if (!best) {
    tol = resolution;
    sweep();
  }
  if (!best) {
    throw std::runtime_error(
        "core_grid_max_entropy: no grid point lies in the core at this resolution");
  }
  return *best;
}

}  // namespace choqpath
