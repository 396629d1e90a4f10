#include "choqpath/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace choqpath {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::runtime_error("instance: " + message);
}

const ordered_json& require(const ordered_json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

int require_int(const ordered_json& j, const char* key, long long lo, long long hi) {
  const ordered_json& field = require(j, key);
  if (!field.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  const long long value = field.get<long long>();
  if (value < lo || value > hi) {
    fail(std::string("field '") + key + "' out of range");
  }
  return static_cast<int>(value);
}

double require_number(const ordered_json& j, const std::string& what) {
  if (!j.is_number()) fail("field '" + what + "' must be a number");
  return j.get<double>();
}

}  // namespace

Capacity resolve_capacity(const Instance& instance) {
  const int m = instance.graph.m();
  if (const auto* table = std::get_if<TableCapacitySpec>(&instance.capacity)) {
    return Capacity(m, table->values);
  }
  if (const auto* v1 = std::get_if<V1CapacitySpec>(&instance.capacity)) {
    return capacity_v1(ProbabilityVector(v1->p));
  }
  const auto& mobius = std::get<MobiusCapacitySpec>(instance.capacity);
  return capacity_from_mobius(MobiusCapacity(m, mobius.masses));
}

DisutilityFn resolve_disutility(const Instance& instance) {
  if (instance.disutility.kind == DisutilityFn::Kind::kIdentity) {
    return DisutilityFn::identity();
  }
  double scale;
  if (instance.disutility.scale) {
    scale = *instance.disutility.scale;
  } else {
    scale = (instance.graph.num_nodes() - 1) *
            static_cast<double>(instance.graph.max_arc_cost());
    if (scale <= 0.0) scale = 1.0;  // all-zero costs: any positive bound works
  }
  return DisutilityFn::power(instance.disutility.exponent, scale);
}

std::string save_instance(const Instance& instance) {
  const StateSpaceGraph& g = instance.graph;
  ordered_json j;
  j["version"] = 1;
  j["m"] = g.m();
  j["num_nodes"] = g.num_nodes();
  j["start"] = g.start();
  j["goals"] = g.goals();

  ordered_json arcs = ordered_json::array();
  for (NodeId n = 0; n < g.num_nodes(); ++n) {
    for (const StateSpaceGraph::OutArc& oa : g.out_arcs(n)) {
      ordered_json arc;
      arc["from"] = n;
      arc["to"] = oa.to;
      const auto c = g.arc_cost(oa.arc);
      arc["costs"] = std::vector<double>(c.begin(), c.end());
      arcs.push_back(std::move(arc));
    }
  }
  j["arcs"] = std::move(arcs);

  ordered_json cap;
  if (const auto* table = std::get_if<TableCapacitySpec>(&instance.capacity)) {
    cap["kind"] = "table";
    ordered_json values;
    for (std::size_t mask = 0; mask < table->values.size(); ++mask) {
      values[std::to_string(mask)] = table->values[mask];
    }
    cap["values"] = std::move(values);
  } else if (const auto* v1 = std::get_if<V1CapacitySpec>(&instance.capacity)) {
    cap["kind"] = "v1";
    cap["p"] = v1->p;
  } else {
    const auto& mobius = std::get<MobiusCapacitySpec>(instance.capacity);
    cap["kind"] = "mobius";
    ordered_json masses;
    for (std::size_t mask = 0; mask < mobius.masses.size(); ++mask) {
      if (mobius.masses[mask] != 0.0) {
        masses[std::to_string(mask)] = mobius.masses[mask];
      }
    }
    cap["masses"] = std::move(masses);
  }
  j["capacity"] = std::move(cap);

  ordered_json dis;
  if (instance.disutility.kind == DisutilityFn::Kind::kPower) {
    dis["kind"] = "power";
    dis["exponent"] = instance.disutility.exponent;
    if (instance.disutility.scale) dis["scale"] = *instance.disutility.scale;
  } else {
    dis["kind"] = "identity";
  }
  j["disutility"] = std::move(dis);

  j["metadata"] = ordered_json::parse(instance.metadata_json);
  return j.dump(2) + "\n";
}

void save_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("instance: cannot open '" + path + "' for writing");
  out << save_instance(instance);
  if (!out) throw std::runtime_error("instance: failed writing '" + path + "'");
}

Instance load_instance(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document must be a JSON object");

  const int version = require_int(j, "version", 1, 1);
  (void)version;
  const int m = require_int(j, "m", 1, kMaxScenarios);
  const int num_nodes = require_int(j, "num_nodes", 1, 1 << 24);
  const int start = require_int(j, "start", 0, num_nodes - 1);

  const ordered_json& goals_json = require(j, "goals");
  if (!goals_json.is_array() || goals_json.empty()) fail("goals must be non-empty");
  std::vector<NodeId> goals;
  for (std::size_t i = 0; i < goals_json.size(); ++i) {
    if (!goals_json[i].is_number_integer()) {
      fail("goals[" + std::to_string(i) + "] must be an integer");
    }
    const long long goal = goals_json[i].get<long long>();
    if (goal < 0 || goal >= num_nodes) fail("goals[" + std::to_string(i) + "] out of range");
    goals.push_back(static_cast<NodeId>(goal));
  }

  const ordered_json& arcs_json = require(j, "arcs");
  if (!arcs_json.is_array()) fail("arcs must be an array");
  std::vector<Arc> arcs;
  arcs.reserve(arcs_json.size());
  for (std::size_t k = 0; k < arcs_json.size(); ++k) {
    const ordered_json& aj = arcs_json[k];
    const std::string where = "arcs[" + std::to_string(k) + "]";
    if (!aj.is_object()) fail(where + " must be an object");
    Arc arc;
    const auto endpoint = [&](const char* key) {
      const auto it = aj.find(key);
      if (it == aj.end() || !it->is_number_integer()) {
        fail(where + "." + key + " must be an integer");
      }
      const long long node = it->get<long long>();
      if (node < 0 || node >= num_nodes) fail(where + "." + key + " out of range");
      return static_cast<NodeId>(node);
    };
    arc.from = endpoint("from");
    arc.to = endpoint("to");
    const auto cit = aj.find("costs");
    if (cit == aj.end() || !cit->is_array()) fail(where + ".costs must be an array");
    if (static_cast<int>(cit->size()) != m) {
      fail(where + ".costs must have exactly m=" + std::to_string(m) + " entries");
    }
    for (std::size_t i = 0; i < cit->size(); ++i) {
      const double c = require_number((*cit)[i], where + ".costs[" + std::to_string(i) + "]");
      if (!(c >= 0.0) || !std::isfinite(c)) {
        fail(where + ".costs[" + std::to_string(i) + "] must be finite and nonnegative");
      }
      arc.costs.push_back(c);
    }
    arcs.push_back(std::move(arc));
  }

  const ordered_json& cap_json = require(j, "capacity");
  if (!cap_json.is_object()) fail("capacity must be an object");
  const ordered_json& kind_json = require(cap_json, "kind");
  if (!kind_json.is_string()) fail("capacity.kind must be a string");
  const std::string kind = kind_json.get<std::string>();
  CapacitySpec capacity_spec;
  const std::size_t table_entries = std::size_t{1} << m;
  if (kind == "table") {
    const ordered_json& values = require(cap_json, "values");
    if (!values.is_object()) fail("capacity.values must be an object");
    if (values.size() != table_entries) {
      fail("capacity.values must have exactly 2^m entries");
    }
    TableCapacitySpec table;
    table.values.resize(table_entries);
    for (std::size_t mask = 0; mask < table_entries; ++mask) {
      const auto it = values.find(std::to_string(mask));
      if (it == values.end()) {
        fail("capacity.values missing entry for subset " + std::to_string(mask));
      }
      table.values[mask] = require_number(*it, "capacity.values." + std::to_string(mask));
    }
    capacity_spec = std::move(table);
  } else if (kind == "v1") {
    const ordered_json& pj = require(cap_json, "p");
    if (!pj.is_array() || static_cast<int>(pj.size()) != m) {
      fail("capacity.p must be an array of m entries");
    }
    V1CapacitySpec v1;
    for (std::size_t i = 0; i < pj.size(); ++i) {
      v1.p.push_back(require_number(pj[i], "capacity.p[" + std::to_string(i) + "]"));
    }
    capacity_spec = std::move(v1);
  } else if (kind == "mobius") {
    const ordered_json& masses_json = require(cap_json, "masses");
    if (!masses_json.is_object()) fail("capacity.masses must be an object");
    MobiusCapacitySpec mobius;
    mobius.masses.assign(table_entries, 0.0);
    for (const auto& [key, value] : masses_json.items()) {
      std::size_t mask = 0;
      try {
        std::size_t pos = 0;
        mask = std::stoull(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail("capacity.masses key '" + key + "' is not a subset index");
      }
      if (mask >= table_entries) {
        fail("capacity.masses key '" + key + "' is out of range for m=" + std::to_string(m));
      }
      mobius.masses[mask] = require_number(value, "capacity.masses." + key);
    }
    capacity_spec = std::move(mobius);
  } else {
    fail("capacity.kind must be 'table', 'v1' or 'mobius'");
  }

  const ordered_json& dis_json = require(j, "disutility");
  if (!dis_json.is_object()) fail("disutility must be an object");
  const ordered_json& dis_kind_json = require(dis_json, "kind");
  if (!dis_kind_json.is_string()) fail("disutility.kind must be a string");
  const std::string dis_kind = dis_kind_json.get<std::string>();
  DisutilitySpec disutility;
  if (dis_kind == "power") {
    disutility.kind = DisutilityFn::Kind::kPower;
    disutility.exponent = require_number(require(dis_json, "exponent"), "disutility.exponent");
    if (!(disutility.exponent >= 1.0)) fail("disutility.exponent must be >= 1");
    if (const auto it = dis_json.find("scale"); it != dis_json.end()) {
      const double scale = require_number(*it, "disutility.scale");
      if (!(scale > 0.0)) fail("disutility.scale must be positive");
      disutility.scale = scale;
    }
  } else if (dis_kind == "identity") {
    disutility.kind = DisutilityFn::Kind::kIdentity;
  } else {
    fail("disutility.kind must be 'power' or 'identity'");
  }

  std::string metadata = "{}";
  if (const auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) fail("metadata must be an object");
    metadata = it->dump();
  }

  Instance instance{
      StateSpaceGraph(num_nodes, m, static_cast<NodeId>(start), std::move(goals),
                      std::move(arcs)),
      std::move(capacity_spec), disutility, std::move(metadata)};

  Capacity resolved = [&] {
    try {
      return resolve_capacity(instance);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }();
  if (!is_concave(resolved)) fail("capacity must be concave (submodular)");

  return instance;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("instance: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_instance(buffer.str());
}

}  // namespace choqpath
