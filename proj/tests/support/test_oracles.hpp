#pragma once

// Independent reference routes used by the test suites. Everything here is
// deliberately written the slow, obvious way and stays decoupled from the
// production code paths it checks.

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "choqpath/capacity.hpp"
#include "choqpath/graph.hpp"

namespace testsup {

// Rank-weighted form of the Choquet integral:
// sum_i [v(X_(i)) - v(X_(i+1))] * z_(i), upper-level sets as positional
// suffixes of the ascending sort, X_(m+1) empty.
inline double choquet_rank_weighted(const choqpath::Capacity& v, std::span<const double> z) {
  const int m = v.m();
  std::array<int, choqpath::kMaxScenarios> order;
  std::iota(order.begin(), order.begin() + m, 0);
  std::sort(order.begin(), order.begin() + m,
            [&](int a, int b) { return z[a] < z[b] || (z[a] == z[b] && a < b); });
  double total = 0.0;
  std::uint32_t upper = v.full_mask();
  for (int i = 0; i < m; ++i) {
    const std::uint32_t next = upper & ~(1u << order[i]);
    total += (v.value_at(upper) - v.value_at(next)) * z[order[i]];
    upper = next;
  }
  return total;
}

// Pairwise reference for non-dominated filtering: survivor indexes in input order.
inline std::vector<std::size_t> nd_survivors_pairwise(
    const std::vector<choqpath::CostVector>& gs) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < gs.size() && !drop; ++j) {
      if (j == i) continue;
      if (choqpath::pareto_strict_dominates(gs[j], gs[i])) drop = true;
      if (j < i && gs[j] == gs[i]) drop = true;
    }
    if (!drop) out.push_back(i);
  }
  return out;
}

// All simple paths from `from` to the goal set, arc-resolved; returns the
// accumulated cost vector of each.
inline std::vector<choqpath::CostVector> all_simple_paths_from(
    const choqpath::StateSpaceGraph& g, choqpath::NodeId from) {
  std::vector<choqpath::CostVector> out;
  std::vector<std::uint8_t> on_stack(static_cast<std::size_t>(g.num_nodes()), 0);
  choqpath::CostVector cost(static_cast<std::size_t>(g.m()), 0.0);
  auto dfs = [&](auto&& self, choqpath::NodeId u) -> void {
    on_stack[static_cast<std::size_t>(u)] = 1;
    if (g.is_goal(u)) out.push_back(cost);
    for (const auto& oa : g.out_arcs(u)) {
      if (on_stack[static_cast<std::size_t>(oa.to)]) continue;
      const auto c = g.arc_cost(oa.arc);
      for (int i = 0; i < g.m(); ++i) cost[i] += c[i];
      self(self, oa.to);
      for (int i = 0; i < g.m(); ++i) cost[i] -= c[i];
    }
    on_stack[static_cast<std::size_t>(u)] = 0;
  };
  dfs(dfs, from);
  return out;
}

// Exhaustive per-scenario cost-to-go from every node (infinity when no goal
// is reachable); the slow counterpart of the Dijkstra tables.
inline std::vector<double> brute_per_scenario_bounds(const choqpath::StateSpaceGraph& g) {
  const int m = g.m();
  std::vector<double> table(static_cast<std::size_t>(g.num_nodes()) * m,
                            std::numeric_limits<double>::infinity());
  for (choqpath::NodeId n = 0; n < g.num_nodes(); ++n) {
    for (const auto& cost : all_simple_paths_from(g, n)) {
      for (int i = 0; i < m; ++i) {
        double& h = table[static_cast<std::size_t>(n) * m + i];
        h = std::min(h, cost[i]);
      }
    }
  }
  return table;
}

inline std::vector<double> brute_scalar_bounds(const choqpath::StateSpaceGraph& g,
                                               const choqpath::ProbabilityVector& p) {
  std::vector<double> table(static_cast<std::size_t>(g.num_nodes()),
                            std::numeric_limits<double>::infinity());
  for (choqpath::NodeId n = 0; n < g.num_nodes(); ++n) {
    for (const auto& cost : all_simple_paths_from(g, n)) {
      double s = 0.0;
      for (int i = 0; i < g.m(); ++i) s += p[i] * cost[i];
      table[static_cast<std::size_t>(n)] = std::min(table[static_cast<std::size_t>(n)], s);
    }
  }
  return table;
}

// Random monotone normalized capacity table; concave only by luck.
inline choqpath::Capacity random_capacity(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = std::size_t{1} << m;
  std::vector<double> v(n);
  v[0] = 0.0;
  for (std::size_t mask = 1; mask < n; ++mask) v[mask] = unit(rng);
  // Monotonize by propagating the max over one-element-smaller subsets.
  for (std::size_t mask = 1; mask < n; ++mask) {
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) v[mask] = std::max(v[mask], v[mask ^ (1u << i)]);
    }
  }
  if (v[n - 1] <= 0.0) v[n - 1] = 1.0;
  for (std::size_t mask = 1; mask < n; ++mask) v[mask] /= v[n - 1];
  return {m, std::move(v)};
}

inline choqpath::ProbabilityVector random_simplex(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> cuts(static_cast<std::size_t>(m) - 1);
  for (double& c : cuts) c = unit(rng);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> p(static_cast<std::size_t>(m));
  double prev = 0.0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    p[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  p.back() = 1.0 - prev;
  return choqpath::ProbabilityVector(std::move(p));
}

// Random concave capacity: distortion kind for even draws, plausibility kind
// for odd ones.
inline choqpath::Capacity random_concave_capacity(std::mt19937_64& rng, int m) {
  if (rng() % 2 == 0) return choqpath::capacity_v1(random_simplex(rng, m));
  std::uniform_real_distribution<double> unit(1e-6, 1.0);
  const std::size_t n = std::size_t{1} << m;
  std::vector<double> masses(n, 0.0);
  double total = 0.0;
  for (std::size_t mask = 1; mask < n; ++mask) {
    masses[mask] = unit(rng);
    total += masses[mask];
  }
  for (std::size_t mask = 1; mask < n; ++mask) masses[mask] /= total;
  return choqpath::capacity_from_mobius(choqpath::MobiusCapacity(m, std::move(masses)));
}

}  // namespace testsup
