#pragma once

#include <cstdint>

#include "choqpath/choquet.hpp"

namespace choqpath {

using NodeId = std::int32_t;

/// A path as its node sequence. With parallel arcs the node sequence alone
/// does not determine the cost; arc-resolved costs live with the labels and
/// the enumeration records.
using Path = std::vector<NodeId>;

struct Arc {
  NodeId from = 0;
  NodeId to = 0;
  CostVector costs;  // one entry per scenario, each >= 0
};

/// Directed state space graph with scenario-dependent arc costs.
///
/// Arcs are stored in forward CSR order (grouped by source node, original
/// relative order preserved) plus a reverse-arc view built once for the
/// heuristic precomputations. Parallel arcs between the same node pair are
/// allowed. Immutable after construction; construction validates cost shape,
/// nonnegativity and that some goal is reachable from the start node.
class StateSpaceGraph {
 public:
  struct OutArc {
    NodeId to;
    std::int32_t arc;
  };
  struct InArc {
    NodeId from;
    std::int32_t arc;
  };

  StateSpaceGraph(int num_nodes, int m, NodeId start, std::vector<NodeId> goals,
                  std::vector<Arc> arcs);

  int num_nodes() const { return num_nodes_; }
  int m() const { return m_; }
  NodeId start() const { return start_; }
  const std::vector<NodeId>& goals() const { return goals_; }
  bool is_goal(NodeId n) const { return goal_flag_[static_cast<std::size_t>(n)] != 0; }
  std::int32_t num_arcs() const { return static_cast<std::int32_t>(out_.size()); }

  std::span<const OutArc> out_arcs(NodeId n) const {
    return {out_.data() + out_head_[n], out_.data() + out_head_[n + 1]};
  }
  std::span<const InArc> in_arcs(NodeId n) const {
    return {in_.data() + in_head_[n], in_.data() + in_head_[n + 1]};
  }
  std::span<const double> arc_cost(std::int32_t arc) const {
    return {costs_.data() + static_cast<std::size_t>(arc) * m_, static_cast<std::size_t>(m_)};
  }

  /// Largest single arc cost over all arcs and scenarios; 0 for arcless graphs.
  double max_arc_cost() const { return max_arc_cost_; }

 private:
  int num_nodes_;
  int m_;
  NodeId start_;
  std::vector<NodeId> goals_;
  std::vector<std::uint8_t> goal_flag_;
  std::vector<std::int32_t> out_head_, in_head_;
  std::vector<OutArc> out_;
  std::vector<InArc> in_;
  std::vector<double> costs_;  // arc-major, num_arcs * m
  double max_arc_cost_ = 0.0;
};

/// Componentwise sum of arc costs along the node sequence; a single-node path
/// costs zero. With parallel arcs the first matching arc in adjacency order is
/// used. Throws if consecutive nodes are not adjacent.
CostVector path_cost(const StateSpaceGraph& g, const Path& p);

/// Weak Pareto dominance: x <= y componentwise.
bool pareto_weak_dominates(std::span<const double> x, std::span<const double> y);

/// Strict Pareto dominance: weak dominance and x != y.
bool pareto_strict_dominates(std::span<const double> x, std::span<const double> y);

/// A detected subpath: terminal node, accumulated cost vector g, evaluation
/// vector f, scalarized cost gbar and the node sequence.
struct Label {
  NodeId node = 0;
  CostVector g;
  CostVector f;
  double gbar = 0.0;
  Path path;
};

/// Keeps exactly the labels whose g is not strictly Pareto-dominated by any
/// other input label's g; among labels with identical g the earliest-inserted
/// one survives. All labels must sit at the same node.
std::vector<Label> nd_filter(std::vector<Label> labels);

}  // namespace choqpath
