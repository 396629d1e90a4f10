#include "choqpath/generator.hpp"

#include <utility>

#include "choqpath/rng.hpp"
#include "json.hpp"

namespace choqpath {

namespace {

bool goal_reachable(int num_nodes, const std::vector<Arc>& arcs, NodeId start, NodeId goal) {
  std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(num_nodes));
  for (const Arc& a : arcs) adj[static_cast<std::size_t>(a.from)].push_back(a.to);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(num_nodes), 0);
  std::vector<NodeId> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (u == goal) return true;
    for (NodeId v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

}  // namespace

Instance generate(const GenerateParams& params) {
  if (params.num_nodes < 2) {
    throw std::invalid_argument("generate: num_nodes must be >= 2");
  }
  if (!(params.density > 0.0) || params.density > 1.0) {
    throw std::invalid_argument("generate: density must lie in (0, 1]");
  }
  if (params.m < 1 || params.m > kMaxScenarios) {
    throw std::invalid_argument("generate: m out of range");
  }
  if (params.capacity_kind != "v1" && params.capacity_kind != "v2") {
    throw std::invalid_argument("generate: capacity_kind must be 'v1' or 'v2'");
  }
  if (!(params.alpha >= 1.0)) {
    throw std::invalid_argument("generate: alpha must be >= 1");
  }

  const int n = params.num_nodes;
  const NodeId start = 0;
  const NodeId goal = static_cast<NodeId>(n - 1);

  SplitMix64 arc_rng = stream_for(params.seed, kStreamArcs);
  SplitMix64 cost_rng = stream_for(params.seed, kStreamCosts);

  std::vector<Arc> arcs;
  bool reachable = false;
  for (int attempt = 0; attempt < params.max_retries && !reachable; ++attempt) {
    arcs.clear();
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId w = 0; w < n; ++w) {
        if (w == u) continue;
        if (arc_rng.next_unit() < params.density) arcs.push_back({u, w, {}});
      }
    }
    for (Arc& a : arcs) {
      a.costs.resize(static_cast<std::size_t>(params.m));
      for (int i = 0; i < params.m; ++i) {
        a.costs[static_cast<std::size_t>(i)] = static_cast<double>(cost_rng.next_upto(100));
      }
    }
    reachable = goal_reachable(n, arcs, start, goal);
  }
  if (!reachable) {
    throw std::runtime_error("generate: goal unreachable after " +
                             std::to_string(params.max_retries) + " arc redraws");
  }

  SplitMix64 cap_rng = stream_for(params.seed, kStreamCapacity);
  CapacitySpec capacity;
  if (params.capacity_kind == "v1") {
    capacity = V1CapacitySpec{sample_simplex(params.m, cap_rng)};
  } else {
    const std::size_t table = std::size_t{1} << params.m;
    std::vector<double> masses(table, 0.0);
    double total = 0.0;
    for (std::size_t mask = 1; mask < table; ++mask) {
      masses[mask] = cap_rng.next_unit_positive();
      total += masses[mask];
    }
    for (std::size_t mask = 1; mask < table; ++mask) masses[mask] /= total;
    capacity = MobiusCapacitySpec{std::move(masses)};
  }

  nlohmann::ordered_json metadata;
  metadata["seed"] = params.seed;
  metadata["density"] = params.density;
  metadata["capacity_kind"] = params.capacity_kind;
  metadata["alpha"] = params.alpha;

  return Instance{
      StateSpaceGraph(n, params.m, start, {goal}, std::move(arcs)),
      std::move(capacity),
      DisutilitySpec{DisutilityFn::Kind::kPower, params.alpha, std::nullopt},
      metadata.dump()};
}

double draw_gamma(std::uint64_t seed) {
  SplitMix64 rng = stream_for(seed, kStreamGamma);
  return 0.7 + 0.3 * rng.next_unit();
}

}  // namespace choqpath
