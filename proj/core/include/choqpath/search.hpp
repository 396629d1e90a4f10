#pragma once

#include <cstdint>

#include "choqpath/graph.hpp"

namespace choqpath {

struct SearchStats {
  std::uint64_t labels_created = 0;
  std::uint64_t labels_expanded = 0;
  std::uint64_t pruned_rule1 = 0;   // strict Pareto dominance at a node (incl. merged duplicates)
  std::uint64_t pruned_rule2 = 0;   // bound against the incumbent
  std::uint64_t pruned_cycle = 0;   // extension back onto its own path
  std::uint64_t paths_enumerated = 0;  // ranking search: solution paths emitted
  std::uint64_t nodes_reopened = 0;    // ranking search
  double search_seconds = 0.0;
};

struct Solution {
  double psi = 0.0;
  CostVector cost;
  Path path;
  SearchStats stats;
};

}  // namespace choqpath
