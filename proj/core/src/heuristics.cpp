#include "choqpath/heuristics.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <utility>

namespace choqpath {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using QueueEntry = std::pair<double, NodeId>;
using MinQueue =
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>>;

// Multi-source Dijkstra from the goal set over the reversed graph; cost of the
// relaxed arc is supplied by the caller.
template <typename ArcCost>
void cost_to_go(const StateSpaceGraph& g, ArcCost&& arc_cost, std::vector<double>& dist) {
  dist.assign(static_cast<std::size_t>(g.num_nodes()), kInf);
  MinQueue pq;
  for (NodeId goal : g.goals()) {
    if (dist[static_cast<std::size_t>(goal)] != 0.0) {
      dist[static_cast<std::size_t>(goal)] = 0.0;
      pq.emplace(0.0, goal);
    }
  }
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[static_cast<std::size_t>(u)]) continue;
    for (const StateSpaceGraph::InArc& ia : g.in_arcs(u)) {
      const double nd = d + arc_cost(ia.arc);
      if (nd < dist[static_cast<std::size_t>(ia.from)]) {
        dist[static_cast<std::size_t>(ia.from)] = nd;
        pq.emplace(nd, ia.from);
      }
    }
  }
}

}  // namespace

std::vector<double> per_scenario_bounds(const StateSpaceGraph& g) {
  const int m = g.m();
  std::vector<double> table(static_cast<std::size_t>(g.num_nodes()) * m, kInf);
  std::vector<double> dist;
  for (int s = 0; s < m; ++s) {
    cost_to_go(g, [&](std::int32_t arc) { return g.arc_cost(arc)[s]; }, dist);
    for (int n = 0; n < g.num_nodes(); ++n) {
      table[static_cast<std::size_t>(n) * m + s] = dist[static_cast<std::size_t>(n)];
    }
  }
  return table;
}

std::vector<double> scalar_bound(const StateSpaceGraph& g, const ProbabilityVector& p) {
  if (p.size() != g.m()) {
    throw std::invalid_argument("scalar_bound: dimension mismatch");
  }
  std::vector<double> dist;
  cost_to_go(
      g,
      [&](std::int32_t arc) {
        const auto c = g.arc_cost(arc);
        double s = 0.0;
        for (int i = 0; i < g.m(); ++i) s += p[i] * c[i];
        return s;
      },
      dist);
  return dist;
}

HeuristicTables build_heuristic_tables(const StateSpaceGraph& g, const ProbabilityVector& p) {
  HeuristicTables t;
  t.m = g.m();
  t.gamma = 1.0;
  t.per_scenario = per_scenario_bounds(g);
  t.scalar = scalar_bound(g, p);
  return t;
}

HeuristicTables apply_gamma(HeuristicTables tables, double gamma) {
  if (!(gamma > 0.0) || gamma > 1.0) {
    throw std::invalid_argument("apply_gamma: gamma must lie in (0, 1]");
  }
  for (double& h : tables.per_scenario) {
    if (std::isfinite(h)) h *= gamma;
  }
  for (double& h : tables.scalar) {
    if (std::isfinite(h)) h *= gamma;
  }
  tables.gamma = gamma;
  return tables;
}

}  // namespace choqpath
