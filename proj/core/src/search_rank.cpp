#include "choqpath/search_rank.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>

namespace choqpath {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RankLabel {
  double gbar;
  double key;  // gbar + hbar(node)
  NodeId node;
  std::int32_t parent;
  std::int32_t depth;
  bool pending = true;  // still sits in its node's label list
};

struct HeapEntry {
  double key;
  std::int32_t depth;
  std::int32_t id;

  bool operator>(const HeapEntry& o) const {
    if (key != o.key) return key > o.key;
    if (depth != o.depth) return depth > o.depth;
    return id > o.id;
  }
};

}  // namespace

Solution solve_rank(
    const StateSpaceGraph& g, const Capacity& v, const DisutilityFn& w,
    const ProbabilityVector& p, std::span<const double> scalar_heuristic,
    const std::function<void(const Path&, const CostVector&, double cp)>& on_solution) {
  const int m = g.m();
  if (v.m() != m || p.size() != m) {
    throw std::invalid_argument("solve_rank: scenario count mismatch");
  }
  if (scalar_heuristic.size() != static_cast<std::size_t>(g.num_nodes())) {
    throw std::invalid_argument("solve_rank: heuristic table does not match the graph");
  }
  if (!is_concave(v)) throw std::invalid_argument("solve_rank: capacity must be concave");
  if (!core_contains(v, p)) {
    throw std::invalid_argument("solve_rank: scalarization vector lies outside core(dual(v))");
  }

  const auto t0 = std::chrono::steady_clock::now();
  SearchStats stats;

  std::vector<RankLabel> labels;
  std::vector<double> gpool;
  std::vector<std::vector<std::int32_t>> pending(static_cast<std::size_t>(g.num_nodes()));
  std::vector<std::uint8_t> node_open(static_cast<std::size_t>(g.num_nodes()), 0);
  std::vector<std::int32_t> expanded_at(static_cast<std::size_t>(g.num_nodes()), -1);
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> open;

  const auto gvec = [&](std::int32_t id) {
    return std::span<const double>(gpool.data() + static_cast<std::size_t>(id) * m,
                                   static_cast<std::size_t>(m));
  };
  std::array<double, kMaxScenarios> wbuf;
  const auto psi_of = [&](std::span<const double> x) {
    for (int i = 0; i < m; ++i) wbuf[i] = w(x[i]);
    return choquet_integral(v, std::span<const double>(wbuf.data(), m));
  };
  const auto on_own_path = [&](std::int32_t id, NodeId n) {
    for (std::int32_t cur = id; cur >= 0; cur = labels[cur].parent) {
      if (labels[cur].node == n) return true;
    }
    return false;
  };
  // Per-node lists are min-heaps over (key, depth, creation order).
  const auto heap_after = [&](std::int32_t a, std::int32_t b) {
    if (labels[a].key != labels[b].key) return labels[a].key > labels[b].key;
    if (labels[a].depth != labels[b].depth) return labels[a].depth > labels[b].depth;
    return a > b;
  };
  const auto push_pending = [&](NodeId n, std::int32_t id) {
    auto& bucket = pending[static_cast<std::size_t>(n)];
    bucket.push_back(id);
    std::push_heap(bucket.begin(), bucket.end(), heap_after);
  };
  const auto pop_front = [&](NodeId n) {
    auto& bucket = pending[static_cast<std::size_t>(n)];
    std::pop_heap(bucket.begin(), bucket.end(), heap_after);
    bucket.pop_back();
  };
  const auto push_open_entry = [&](std::int32_t id) {
    open.push({labels[id].key, labels[id].depth, id});
  };

  double lambda = kInf;
  std::int32_t best = -1;

  // Reopens a node whose expanded label is consumed: discards the expansion
  // record and, when pending labels remain, makes the node selectable again.
  const auto consume_and_reopen = [&](NodeId n) {
    expanded_at[static_cast<std::size_t>(n)] = -1;
    const auto& bucket = pending[static_cast<std::size_t>(n)];
    if (!bucket.empty()) {
      node_open[static_cast<std::size_t>(n)] = 1;
      push_open_entry(bucket.front());
      ++stats.nodes_reopened;
    } else {
      node_open[static_cast<std::size_t>(n)] = 0;
    }
  };

  // Frees every closed node whose best pending label could still beat the
  // incumbent. Returns true when anything was reopened.
  const auto reopen_frozen = [&]() {
    bool any = false;
    for (NodeId n = 0; n < g.num_nodes(); ++n) {
      if (expanded_at[static_cast<std::size_t>(n)] < 0) continue;
      const auto& bucket = pending[static_cast<std::size_t>(n)];
      if (!bucket.empty() && w(labels[bucket.front()].key) < lambda) {
        consume_and_reopen(n);
        any = true;
      }
    }
    return any;
  };

  // Drop pending labels that can no longer beat the incumbent.
  const auto collect_garbage = [&]() {
    for (NodeId n = 0; n < g.num_nodes(); ++n) {
      auto& bucket = pending[static_cast<std::size_t>(n)];
      bool changed = false;
      for (std::int32_t id : bucket) {
        if (w(labels[id].key) >= lambda) {
          labels[id].pending = false;
          ++stats.pruned_rule2;
          changed = true;
        }
      }
      if (!changed) continue;
      std::erase_if(bucket, [&](std::int32_t id) { return !labels[id].pending; });
      std::make_heap(bucket.begin(), bucket.end(), heap_after);
      if (node_open[static_cast<std::size_t>(n)] && !bucket.empty()) {
        push_open_entry(bucket.front());
      }
    }
  };

  // Root label.
  {
    const double hbar_s = scalar_heuristic[static_cast<std::size_t>(g.start())];
    if (!std::isfinite(hbar_s)) throw std::runtime_error("solve_rank: no solution path exists");
    gpool.assign(static_cast<std::size_t>(m), 0.0);
    labels.push_back({0.0, hbar_s, g.start(), -1, 0});
    push_pending(g.start(), 0);
    node_open[static_cast<std::size_t>(g.start())] = 1;
    push_open_entry(0);
    ++stats.labels_created;
  }

  std::array<double, kMaxScenarios> gnew;
  while (true) {
    // Select the best pending label over open nodes (stale entries skipped).
    std::int32_t sel = -1;
    while (!open.empty()) {
      const HeapEntry e = open.top();
      open.pop();
      if (!labels[e.id].pending) continue;
      const NodeId n = labels[e.id].node;
      if (!node_open[static_cast<std::size_t>(n)]) continue;
      const auto& bucket = pending[static_cast<std::size_t>(n)];
      if (bucket.empty() || bucket.front() != e.id) continue;
      sel = e.id;
      break;
    }
    if (sel < 0) {
      if (reopen_frozen()) continue;
      break;
    }
    if (w(labels[sel].key) >= lambda) {
      push_open_entry(sel);  // keep it selectable if the sweep frees better labels
      if (reopen_frozen()) continue;
      break;
    }

    const NodeId u = labels[sel].node;
    pop_front(u);
    labels[sel].pending = false;
    node_open[static_cast<std::size_t>(u)] = 0;
    expanded_at[static_cast<std::size_t>(u)] = sel;
    ++stats.labels_expanded;

    if (g.is_goal(u)) {
      ++stats.paths_enumerated;
      const double psi_g = psi_of(gvec(sel));
      const bool improved = psi_g < lambda;
      if (improved) {
        lambda = psi_g;
        best = sel;
      }
      Path nodes;
      for (std::int32_t cur = sel; cur >= 0; cur = labels[cur].parent) {
        nodes.push_back(labels[cur].node);
      }
      std::reverse(nodes.begin(), nodes.end());
      if (on_solution) {
        on_solution(nodes, CostVector(gvec(sel).begin(), gvec(sel).end()), labels[sel].gbar);
      }
      for (NodeId n : nodes) {
        if (expanded_at[static_cast<std::size_t>(n)] >= 0) consume_and_reopen(n);
      }
      if (improved) collect_garbage();
      continue;
    }

    int extensions = 0;
    for (const StateSpaceGraph::OutArc& oa : g.out_arcs(u)) {
      if (on_own_path(sel, oa.to)) {
        ++stats.pruned_cycle;
        continue;
      }
      const double hbar = scalar_heuristic[static_cast<std::size_t>(oa.to)];
      if (!std::isfinite(hbar)) continue;
      const auto c = g.arc_cost(oa.arc);
      double cbar = 0.0;
      const auto gu = gvec(sel);
      for (int i = 0; i < m; ++i) {
        gnew[i] = gu[i] + c[i];
        cbar += p[i] * c[i];
      }
      const double gbar2 = labels[sel].gbar + cbar;
      if (w(gbar2 + hbar) >= lambda) {
        ++stats.pruned_rule2;
        continue;
      }
      const std::int32_t id = static_cast<std::int32_t>(labels.size());
      gpool.insert(gpool.end(), gnew.begin(), gnew.begin() + m);
      labels.push_back({gbar2, gbar2 + hbar, oa.to, sel, labels[sel].depth + 1});
      push_pending(oa.to, id);
      ++stats.labels_created;
      ++extensions;
      if (expanded_at[static_cast<std::size_t>(oa.to)] < 0) {
        node_open[static_cast<std::size_t>(oa.to)] = 1;
        if (pending[static_cast<std::size_t>(oa.to)].front() == id) push_open_entry(id);
      }
    }
    if (extensions == 0) consume_and_reopen(u);  // dead end: nothing will consume it later
  }

  if (best < 0) throw std::runtime_error("solve_rank: no solution path exists");

  Solution sol;
  sol.psi = lambda;
  sol.cost.assign(gvec(best).begin(), gvec(best).end());
  for (std::int32_t cur = best; cur >= 0; cur = labels[cur].parent) {
    sol.path.push_back(labels[cur].node);
  }
  std::reverse(sol.path.begin(), sol.path.end());
  sol.stats = stats;
  sol.stats.search_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

}  // namespace choqpath
