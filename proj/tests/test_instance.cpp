#include <cmath>
#include <random>

#include "choqpath/generator.hpp"
#include "choqpath/instance.hpp"
#include "doctest.h"

using namespace choqpath;

namespace {

const std::string kFixtures = CHOQPATH_FIXTURE_DIR;

std::string fan_text() {
  const Instance inst = load_instance_file(kFixtures + "/fan_imprecise.json");
  return save_instance(inst);
}

}  // namespace

TEST_CASE("fixture loads and evaluates") {
  const Instance inst = load_instance_file(kFixtures + "/fan_imprecise.json");
  CHECK(inst.graph.num_nodes() == 6);
  CHECK(inst.graph.m() == 3);
  const Capacity v = resolve_capacity(inst);
  const DisutilityFn w = resolve_disutility(inst);
  CHECK(w.scale() == 100.0);
  CHECK(ced(v, w, CostVector{0.0, 100.0, 100.0}) == 2.0 / 3.0);
  CHECK(ced(v, w, CostVector{100.0, 0.0, 100.0}) == 1.0);
  CHECK(ced(v, w, CostVector{0.0, 100.0, 0.0}) == 2.0 / 3.0);
  CHECK(ced(v, w, CostVector{100.0, 0.0, 0.0}) == 1.0 / 3.0);
}

TEST_CASE("load rejects malformed documents with a field diagnostic") {
  const auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      load_instance(text);
      FAIL_CHECK("expected failure containing '" << needle << "'");
    } catch (const std::exception& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error(R"({"version":1,"m":2,"num_nodes":2,"start":0,"goals":[],"arcs":[],)"
               R"("capacity":{"kind":"v1","p":[0.5,0.5]},"disutility":{"kind":"identity"}})",
               "goals must be non-empty");
  expect_error(R"({"version":1,"m":2,"num_nodes":2,"start":0,"goals":[1],)"
               R"("arcs":[{"from":0,"to":1,"costs":[1.0]}],)"
               R"("capacity":{"kind":"v1","p":[0.5,0.5]},"disutility":{"kind":"identity"}})",
               "arcs[0].costs");
  expect_error(R"({"version":1,"m":2,"num_nodes":2,"start":0,"goals":[1],)"
               R"("arcs":[{"from":0,"to":1,"costs":[1.0,1.0]}],)"
               R"("capacity":{"kind":"table","values":{"0":0.0,"1":0.2,"2":0.3,"3":1.0}},)"
               R"("disutility":{"kind":"power","exponent":0.5}})",
               "disutility.exponent");
  expect_error(R"({"version":2,"m":2,"num_nodes":2,"start":0,"goals":[1],"arcs":[],)"
               R"("capacity":{"kind":"v1","p":[0.5,0.5]},"disutility":{"kind":"identity"}})",
               "version");
  expect_error("{not json", "invalid JSON");
  // Convex but not concave: rejected at load.
  expect_error(R"({"version":1,"m":2,"num_nodes":2,"start":0,"goals":[1],)"
               R"("arcs":[{"from":0,"to":1,"costs":[1.0,1.0]}],)"
               R"("capacity":{"kind":"table","values":{"0":0.0,"1":0.1,"2":0.1,"3":1.0}},)"
               R"("disutility":{"kind":"identity"}})",
               "concave");
}

TEST_CASE("save-load round trips are byte identical") {
  SUBCASE("fixtures") {
    for (const std::string name : {"fan_imprecise.json", "bellman_trap.json"}) {
      const Instance first = load_instance_file(kFixtures + "/" + name);
      const std::string saved = save_instance(first);
      const Instance second = load_instance(saved);
      CHECK(save_instance(second) == saved);
    }
  }
  SUBCASE("generated instances, both capacity kinds") {
    for (int trial = 0; trial < 10; ++trial) {
      GenerateParams params;
      params.num_nodes = 9;
      params.density = 0.45;
      params.m = 3;
      params.capacity_kind = (trial % 2 == 0) ? "v1" : "v2";
      params.seed = 11000 + trial;
      const Instance inst = generate(params);
      const std::string saved = save_instance(inst);
      CHECK(save_instance(load_instance(saved)) == saved);
    }
  }
  SUBCASE("metadata survives verbatim") {
    const std::string saved = fan_text();
    CHECK(saved.find("fan of four candidate routes") != std::string::npos);
  }
}

TEST_CASE("generator") {
  SUBCASE("same seed, same bytes") {
    GenerateParams params;
    params.num_nodes = 20;
    params.density = 0.45;
    params.m = 4;
    params.seed = 424242;
    CHECK(save_instance(generate(params)) == save_instance(generate(params)));
    params.capacity_kind = "v2";
    CHECK(save_instance(generate(params)) == save_instance(generate(params)));
  }
  SUBCASE("arc count is binomially plausible at scale") {
    GenerateParams params;
    params.num_nodes = 1000;
    params.density = 0.45;
    params.m = 2;
    params.seed = 99;
    const Instance inst = generate(params);
    const double pairs = 1000.0 * 999.0;
    const double mean = 0.45 * pairs;
    const double sigma = std::sqrt(pairs * 0.45 * 0.55);
    CHECK(std::abs(inst.graph.num_arcs() - mean) <= 3.0 * sigma);
  }
  SUBCASE("costs are integers in [0, 100]") {
    GenerateParams params;
    params.num_nodes = 12;
    params.density = 0.45;
    params.m = 3;
    params.seed = 5;
    const Instance inst = generate(params);
    for (std::int32_t a = 0; a < inst.graph.num_arcs(); ++a) {
      for (double c : inst.graph.arc_cost(a)) {
        CHECK(c >= 0.0);
        CHECK(c <= 100.0);
        CHECK(c == std::floor(c));
      }
    }
  }
  SUBCASE("v1 instances resolve to concave capacities") {
    for (int m : {2, 3, 4}) {
      GenerateParams params;
      params.num_nodes = 8;
      params.density = 0.45;
      params.m = m;
      params.seed = 12000 + m;
      CHECK(is_concave(resolve_capacity(generate(params))));
    }
  }
  SUBCASE("m = 10 capacity passes a sampled pair check") {
    GenerateParams params;
    params.num_nodes = 8;
    params.density = 0.45;
    params.m = 10;
    params.seed = 31337;
    const Capacity v = resolve_capacity(generate(params));
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100000; ++trial) {
      const std::uint32_t a = static_cast<std::uint32_t>(rng()) & v.full_mask();
      const std::uint32_t b = static_cast<std::uint32_t>(rng()) & v.full_mask();
      CHECK(v.value_at(a | b) + v.value_at(a & b) <= v.value_at(a) + v.value_at(b) + 1e-9);
    }
  }
  SUBCASE("hopeless densities exhaust the retry budget") {
    GenerateParams params;
    params.num_nodes = 3;
    params.density = 1e-12;
    params.m = 2;
    params.seed = 1;
    params.max_retries = 4;
    CHECK_THROWS_AS(generate(params), std::runtime_error);
  }
  SUBCASE("default disutility bound covers every simple path") {
    GenerateParams params;
    params.num_nodes = 9;
    params.density = 0.5;
    params.m = 2;
    params.seed = 8;
    const Instance inst = generate(params);
    const DisutilityFn w = resolve_disutility(inst);
    CHECK(w.scale() == doctest::Approx(8.0 * inst.graph.max_arc_cost()).epsilon(1e-12));
  }
}
