#include "choqpath/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace choqpath {

StateSpaceGraph::StateSpaceGraph(int num_nodes, int m, NodeId start,
                                 std::vector<NodeId> goals, std::vector<Arc> arcs)
    : num_nodes_(num_nodes), m_(m), start_(start), goals_(std::move(goals)) {
  if (num_nodes_ < 1) throw std::invalid_argument("StateSpaceGraph: num_nodes must be >= 1");
  if (m_ < 1 || m_ > kMaxScenarios) {
    throw std::invalid_argument("StateSpaceGraph: m must be in [1, " +
                                std::to_string(kMaxScenarios) + "]");
  }
  if (start_ < 0 || start_ >= num_nodes_) {
    throw std::invalid_argument("StateSpaceGraph: start node out of range");
  }
  if (goals_.empty()) throw std::invalid_argument("goals must be non-empty");
  goal_flag_.assign(static_cast<std::size_t>(num_nodes_), 0);
  for (std::size_t i = 0; i < goals_.size(); ++i) {
    if (goals_[i] < 0 || goals_[i] >= num_nodes_) {
      throw std::invalid_argument("StateSpaceGraph: goals[" + std::to_string(i) +
                                  "] out of range");
    }
    goal_flag_[static_cast<std::size_t>(goals_[i])] = 1;
  }

  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const Arc& a = arcs[k];
    if (a.from < 0 || a.from >= num_nodes_ || a.to < 0 || a.to >= num_nodes_) {
      throw std::invalid_argument("StateSpaceGraph: arcs[" + std::to_string(k) +
                                  "] endpoint out of range");
    }
    if (static_cast<int>(a.costs.size()) != m_) {
      throw std::invalid_argument("StateSpaceGraph: arcs[" + std::to_string(k) +
                                  "].costs must have m entries");
    }
    for (double c : a.costs) {
      if (!(c >= 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("StateSpaceGraph: arcs[" + std::to_string(k) +
                                    "] has a negative or non-finite cost");
      }
      max_arc_cost_ = std::max(max_arc_cost_, c);
    }
  }

  // Forward CSR, stable within each source node.
  const std::size_t n_arcs = arcs.size();
  out_head_.assign(static_cast<std::size_t>(num_nodes_) + 1, 0);
  for (const Arc& a : arcs) ++out_head_[static_cast<std::size_t>(a.from) + 1];
  for (int n = 0; n < num_nodes_; ++n) out_head_[n + 1] += out_head_[n];
  out_.resize(n_arcs);
  costs_.resize(n_arcs * static_cast<std::size_t>(m_));
  {
    std::vector<std::int32_t> cursor(out_head_.begin(), out_head_.end() - 1);
    for (const Arc& a : arcs) {
      const std::int32_t id = cursor[a.from]++;
      out_[id] = {a.to, id};
      std::copy(a.costs.begin(), a.costs.end(),
                costs_.begin() + static_cast<std::size_t>(id) * m_);
    }
  }

  // Reverse view referencing the same cost storage.
  in_head_.assign(static_cast<std::size_t>(num_nodes_) + 1, 0);
  for (int n = 0; n < num_nodes_; ++n) {
    for (const OutArc& oa : out_arcs(n)) ++in_head_[static_cast<std::size_t>(oa.to) + 1];
  }
  for (int n = 0; n < num_nodes_; ++n) in_head_[n + 1] += in_head_[n];
  in_.resize(n_arcs);
  {
    std::vector<std::int32_t> cursor(in_head_.begin(), in_head_.end() - 1);
    for (int n = 0; n < num_nodes_; ++n) {
      for (const OutArc& oa : out_arcs(n)) {
        in_[cursor[oa.to]++] = {static_cast<NodeId>(n), oa.arc};
      }
    }
  }

  // Some goal must be reachable from the start.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(num_nodes_), 0);
  std::vector<NodeId> stack{start_};
  seen[static_cast<std::size_t>(start_)] = 1;
  bool reachable = false;
  while (!stack.empty() && !reachable) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (is_goal(u)) {
      reachable = true;
      break;
    }
    for (const OutArc& oa : out_arcs(u)) {
      if (!seen[static_cast<std::size_t>(oa.to)]) {
        seen[static_cast<std::size_t>(oa.to)] = 1;
        stack.push_back(oa.to);
      }
    }
  }
  if (!reachable) {
    throw std::invalid_argument("StateSpaceGraph: no goal is reachable from the start node");
  }
}

CostVector path_cost(const StateSpaceGraph& g, const Path& p) {
  if (p.empty()) throw std::invalid_argument("path_cost: path must be non-empty");
  CostVector total(static_cast<std::size_t>(g.m()), 0.0);
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    const NodeId from = p[k];
    const NodeId to = p[k + 1];
    bool found = false;
    for (const StateSpaceGraph::OutArc& oa : g.out_arcs(from)) {
      if (oa.to == to) {
        const auto c = g.arc_cost(oa.arc);
        for (int i = 0; i < g.m(); ++i) total[i] += c[i];
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("path_cost: nodes " + std::to_string(from) + " and " +
                                  std::to_string(to) + " are not adjacent");
    }
  }
  return total;
}

bool pareto_weak_dominates(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("pareto dominance: dimension mismatch");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

bool pareto_strict_dominates(std::span<const double> x, std::span<const double> y) {
  if (!pareto_weak_dominates(x, y)) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return true;
  }
  return false;
}

std::vector<Label> nd_filter(std::vector<Label> labels) {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i].node != labels[0].node) {
      throw std::invalid_argument("nd_filter: labels must share the same node");
    }
  }
  std::vector<bool> keep(labels.size(), true);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size() && keep[i]; ++j) {
      if (j == i) continue;
      if (pareto_strict_dominates(labels[j].g, labels[i].g)) keep[i] = false;
      if (j < i && labels[j].g == labels[i].g) keep[i] = false;
    }
  }
  std::vector<Label> out;
  out.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (keep[i]) out.push_back(std::move(labels[i]));
  }
  return out;
}

}  // namespace choqpath
