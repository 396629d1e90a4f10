#include "choqpath/search_mo.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>

namespace choqpath {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct MoLabel {
  double gbar;
  double psi_f;
  double key;  // max{psi(f), w(gbar + hbar(node))}
  NodeId node;
  std::int32_t parent;
  std::int32_t depth;
  bool closed = false;
  bool dead = false;
};

struct HeapEntry {
  double key;
  double psi_f;
  std::int32_t depth;
  std::uint64_t seq;
  std::int32_t id;

  bool operator>(const HeapEntry& o) const {
    if (key != o.key) return key > o.key;
    if (psi_f != o.psi_f) return psi_f > o.psi_f;
    if (depth != o.depth) return depth > o.depth;
    return seq > o.seq;
  }
};

}  // namespace

Solution solve_mo(const StateSpaceGraph& g, const Capacity& v, const DisutilityFn& w,
                  const ProbabilityVector& p, const HeuristicTables& h,
                  const MoOptions& options) {
  const int m = g.m();
  if (v.m() != m || p.size() != m || h.m != m) {
    throw std::invalid_argument("solve_mo: scenario count mismatch");
  }
  if (h.per_scenario.size() != static_cast<std::size_t>(g.num_nodes()) * m ||
      h.scalar.size() != static_cast<std::size_t>(g.num_nodes())) {
    throw std::invalid_argument("solve_mo: heuristic tables do not match the graph");
  }
  if (!is_concave(v)) throw std::invalid_argument("solve_mo: capacity must be concave");
  if (!core_contains(v, p)) {
    throw std::invalid_argument("solve_mo: scalarization vector lies outside core(dual(v))");
  }

  const auto t0 = std::chrono::steady_clock::now();
  SearchStats stats;

  std::vector<MoLabel> labels;
  std::vector<double> gpool;  // label-major, labels.size() * m
  std::vector<std::vector<std::int32_t>> at_node(static_cast<std::size_t>(g.num_nodes()));
  std::vector<double> naive_best;
  if (options.naive_psi_pruning) {
    naive_best.assign(static_cast<std::size_t>(g.num_nodes()), kInf);
  }
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> open;
  std::uint64_t seq = 0;

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

  // Root label at the start node: zero cost, f = h(start).
  {
    const auto hs = h.vec(g.start());
    if (!std::isfinite(hs[0])) {
      throw std::runtime_error("solve_mo: no solution path exists");
    }
    const double psi_f = psi_of(hs);
    const double key = std::max(psi_f, w(h.bar(g.start())));
    gpool.assign(static_cast<std::size_t>(m), 0.0);
    labels.push_back({0.0, psi_f, key, g.start(), -1, 0});
    at_node[static_cast<std::size_t>(g.start())].push_back(0);
    if (options.naive_psi_pruning) naive_best[static_cast<std::size_t>(g.start())] = 0.0;
    open.push({key, psi_f, 0, seq++, 0});
    ++stats.labels_created;
  }

  double lambda = kInf;
  std::int32_t best = -1;
  std::array<double, kMaxScenarios> gnew, fnew;

  while (!open.empty()) {
    const HeapEntry e = open.top();
    open.pop();
    if (labels[e.id].dead || labels[e.id].closed) continue;
    if (options.use_rule2 && e.key >= lambda) break;  // min key: nothing left to improve
    labels[e.id].closed = true;
    ++stats.labels_expanded;

    const NodeId u = labels[e.id].node;
    if (g.is_goal(u)) {
      const double psi_g = psi_of(gvec(e.id));
      if (psi_g < lambda) {
        lambda = psi_g;
        best = e.id;
      }
      continue;
    }

    const double gbar_u = labels[e.id].gbar;
    const std::int32_t depth = labels[e.id].depth;
    for (const StateSpaceGraph::OutArc& oa : g.out_arcs(u)) {
      if (on_own_path(e.id, oa.to)) {
        ++stats.pruned_cycle;
        continue;
      }
      const auto hv = h.vec(oa.to);
      if (!std::isfinite(hv[0])) continue;  // no goal reachable from there

      const auto c = g.arc_cost(oa.arc);
      const auto gu = gvec(e.id);
      double cbar = 0.0;
      for (int i = 0; i < m; ++i) {
        gnew[i] = gu[i] + c[i];
        fnew[i] = gnew[i] + hv[i];
        cbar += p[i] * c[i];
      }
      const double gbar2 = gbar_u + cbar;
      const double psi_f2 = psi_of(std::span<const double>(fnew.data(), m));
      const double key2 = std::max(psi_f2, w(gbar2 + h.bar(oa.to)));
      if (options.use_rule2 && key2 >= lambda) {
        ++stats.pruned_rule2;
        continue;
      }

      auto& bucket = at_node[static_cast<std::size_t>(oa.to)];
      const std::span<const double> gn(gnew.data(), static_cast<std::size_t>(m));
      if (options.naive_psi_pruning) {
        const double psi_g2 = psi_of(gn);
        double& incumbent = naive_best[static_cast<std::size_t>(oa.to)];
        if (psi_g2 >= incumbent) {
          ++stats.pruned_rule1;
          continue;
        }
        incumbent = psi_g2;
        for (std::int32_t other : bucket) {
          if (!labels[other].closed) labels[other].dead = true;
        }
        bucket.clear();
      } else if (options.use_rule1) {
        bool dominated = false;
        for (std::int32_t other : bucket) {
          if (pareto_weak_dominates(gvec(other), gn)) {  // strictly better or equal
            dominated = true;
            break;
          }
        }
        if (dominated) {
          ++stats.pruned_rule1;
          continue;
        }
        std::erase_if(bucket, [&](std::int32_t other) {
          if (!labels[other].closed && pareto_strict_dominates(gn, gvec(other))) {
            labels[other].dead = true;
            ++stats.pruned_rule1;
            return true;
          }
          return false;
        });
      }

      const std::int32_t id = static_cast<std::int32_t>(labels.size());
      gpool.insert(gpool.end(), gnew.begin(), gnew.begin() + m);
      labels.push_back({gbar2, psi_f2, key2, oa.to, e.id, depth + 1});
      bucket.push_back(id);
      open.push({key2, psi_f2, depth + 1, seq++, id});
      ++stats.labels_created;
    }
  }

  if (best < 0) throw std::runtime_error("solve_mo: no solution path exists");

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
