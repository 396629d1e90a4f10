#include <algorithm>
#include <cmath>

#include "choqpath/generator.hpp"
#include "choqpath/heuristics.hpp"
#include "choqpath/oracle.hpp"
#include "choqpath/search_mo.hpp"
#include "choqpath/search_rank.hpp"
#include "doctest.h"

using namespace choqpath;

namespace {

Instance trap_fixture() {
  return load_instance_file(std::string(CHOQPATH_FIXTURE_DIR) + "/bellman_trap.json");
}

}  // namespace

TEST_CASE("stops after one path when the scalar-best route is also optimal") {
  // Direct arc beats the detour in every scenario, so the first enumerated
  // path is optimal and the next selection already fails the stopping bound.
  const StateSpaceGraph g(3, 2, 0, {2},
                          {{0, 2, {10.0, 10.0}}, {0, 1, {100.0, 100.0}}, {1, 2, {100.0, 100.0}}});
  const Capacity v = capacity_v1(ProbabilityVector({0.5, 0.5}));
  const DisutilityFn w = DisutilityFn::power(2.0, 400.0);
  const ProbabilityVector p = max_entropy(v);
  const Solution sol = solve_rank(g, v, w, p, scalar_bound(g, p));
  CHECK(sol.stats.paths_enumerated == 1);
  CHECK(sol.psi == doctest::Approx(ced(v, w, CostVector{10.0, 10.0})).epsilon(1e-12));
}

TEST_CASE("agrees with the multiobjective search on the trap instance") {
  const Instance inst = trap_fixture();
  const Capacity v = resolve_capacity(inst);
  const DisutilityFn w = resolve_disutility(inst);
  const ProbabilityVector p = max_entropy(v);
  const HeuristicTables tables = build_heuristic_tables(inst.graph, p);
  const Solution mo = solve_mo(inst.graph, v, w, p, tables);
  const Solution rank = solve_rank(inst.graph, v, w, p, tables.scalar);
  CHECK(rank.psi == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(rank.psi == doctest::Approx(mo.psi).epsilon(1e-12));
}

TEST_CASE("precondition violations are rejected") {
  const Instance inst = trap_fixture();
  const Capacity v = resolve_capacity(inst);
  const DisutilityFn w = resolve_disutility(inst);
  const ProbabilityVector p = max_entropy(v);
  const auto hbar = scalar_bound(inst.graph, p);
  CHECK_THROWS_AS(solve_rank(inst.graph, dual(v), w, p, hbar), std::invalid_argument);
  CHECK_THROWS_AS(solve_rank(inst.graph, v, w, ProbabilityVector({1.0, 0.0, 0.0}), hbar),
                  std::invalid_argument);
}

TEST_CASE("emits solutions in non-decreasing scalarized order") {
  for (int trial = 0; trial < 25; ++trial) {
    GenerateParams params;
    params.num_nodes = 8 + trial % 4;
    params.density = 0.45;
    params.m = 2 + trial % 3;
    params.seed = 7000 + trial;
    const Instance inst = generate(params);
    const Capacity v = resolve_capacity(inst);
    const DisutilityFn w = resolve_disutility(inst);
    const ProbabilityVector p = max_entropy(v);
    const auto hbar = scalar_bound(inst.graph, p);

    std::vector<double> emitted;
    std::vector<std::pair<Path, CostVector>> paths;
    solve_rank(inst.graph, v, w, p, hbar,
               [&](const Path& nodes, const CostVector& cost, double cp) {
                 emitted.push_back(cp);
                 paths.emplace_back(nodes, cost);
               });
    REQUIRE(!emitted.empty());
    for (std::size_t i = 1; i < emitted.size(); ++i) {
      CHECK(emitted[i] >= emitted[i - 1] - 1e-9);
    }

    // Every emitted path is a real solution path with the claimed costs, and
    // the first one is scalar-optimal.
    EnumerationReport report = enumerate_solution_paths(inst.graph);
    annotate_report(report, v, w, &p);
    double best_cp = std::numeric_limits<double>::infinity();
    for (const auto& rec : report.paths) best_cp = std::min(best_cp, rec.cp);
    CHECK(emitted.front() == doctest::Approx(best_cp).epsilon(1e-9));
    for (const auto& [nodes, cost] : paths) {
      const bool known = std::any_of(report.paths.begin(), report.paths.end(),
                                     [&](const SolutionPathRecord& rec) {
                                       return rec.nodes == nodes && rec.cost == cost;
                                     });
      CHECK(known);
    }
  }
}

TEST_CASE("matches the exhaustive optimum and the multiobjective search") {
  for (int trial = 0; trial < 50; ++trial) {
    GenerateParams params;
    params.num_nodes = 8 + trial % 5;
    params.density = 0.45;
    params.m = 2 + trial % 3;
    params.capacity_kind = (trial % 2 == 0) ? "v1" : "v2";
    params.seed = 8000 + trial;
    params.alpha = 1.0 + trial % 3;
    const Instance inst = generate(params);
    const Capacity v = resolve_capacity(inst);
    const DisutilityFn w = resolve_disutility(inst);
    const ProbabilityVector p = (trial % 2 == 0) ? max_entropy(v) : shapley(v);
    const HeuristicTables tables = build_heuristic_tables(inst.graph, p);

    const Solution expected = brute_force_optimum(inst.graph, v, w);
    const Solution rank = solve_rank(inst.graph, v, w, p, tables.scalar);
    const Solution mo = solve_mo(inst.graph, v, w, p, tables);
    CHECK(std::abs(rank.psi - expected.psi) <= 1e-9);
    CHECK(std::abs(rank.psi - mo.psi) <= 1e-9);
  }
}

TEST_CASE("weakened scalar heuristics never change the value") {
  for (int trial = 0; trial < 10; ++trial) {
    GenerateParams params;
    params.num_nodes = 10;
    params.density = 0.45;
    params.m = 3;
    params.seed = 9000 + trial;
    const Instance inst = generate(params);
    const Capacity v = resolve_capacity(inst);
    const DisutilityFn w = resolve_disutility(inst);
    const ProbabilityVector p = max_entropy(v);
    HeuristicTables tables;
    tables.m = inst.graph.m();
    tables.scalar = scalar_bound(inst.graph, p);
    const double exact_psi = solve_rank(inst.graph, v, w, p, tables.scalar).psi;
    for (double gamma : {0.7, 0.9}) {
      const HeuristicTables weak = apply_gamma(tables, gamma);
      CHECK(solve_rank(inst.graph, v, w, p, weak.scalar).psi ==
            doctest::Approx(exact_psi).epsilon(1e-12));
    }
  }
}
