#pragma once

#include <optional>
#include <string>
#include <variant>

#include "choqpath/graph.hpp"

namespace choqpath {

/// Capacity given as an explicit table of 2^m values indexed by subset bitmask.
struct TableCapacitySpec {
  std::vector<double> values;
};

/// Capacity derived from a probability vector: v1(A) = 1 - (sum_{i not in A} p_i)^2.
struct V1CapacitySpec {
  std::vector<double> p;
};

/// Plausibility capacity from nonnegative Mobius masses (dense, empty set 0).
struct MobiusCapacitySpec {
  std::vector<double> masses;
};

using CapacitySpec = std::variant<TableCapacitySpec, V1CapacitySpec, MobiusCapacitySpec>;

struct DisutilitySpec {
  DisutilityFn::Kind kind = DisutilityFn::Kind::kPower;
  double exponent = 2.0;
  /// Power kind only. When absent, the bound defaults to
  /// (num_nodes - 1) * max arc cost, a valid bound for every simple path.
  std::optional<double> scale;
};

/// A solvable problem: graph, belief model, disutility and free-form
/// generator metadata (kept as canonical JSON text so files round-trip
/// byte for byte).
struct Instance {
  StateSpaceGraph graph;
  CapacitySpec capacity;
  DisutilitySpec disutility;
  std::string metadata_json = "{}";
};

/// Builds the concrete capacity from the spec. Validity is enforced by the
/// Capacity constructor; concavity was checked at load / generation time.
Capacity resolve_capacity(const Instance& instance);

DisutilityFn resolve_disutility(const Instance& instance);

/// Canonical JSON serialization. Saving is deterministic: fixed key order,
/// arcs in adjacency order, capacity tables keyed by decimal bitmask strings
/// in increasing order, shortest round-trip float formatting. save(load(s))
/// reproduces s byte for byte for every canonically saved document.
std::string save_instance(const Instance& instance);
void save_instance_file(const Instance& instance, const std::string& path);

/// Parses and fully validates an instance document. Violations raise
/// std::runtime_error with a message naming the offending field; the resolved
/// capacity must be a valid concave capacity and the scenario count must be
/// consistent across arcs, capacity and disutility.
Instance load_instance(const std::string& json_text);
Instance load_instance_file(const std::string& path);

}  // namespace choqpath
