#include <cmath>
#include <limits>

#include "choqpath/generator.hpp"
#include "choqpath/heuristics.hpp"
#include "doctest.h"
#include "support/test_oracles.hpp"

using namespace choqpath;

TEST_CASE("per-scenario cost-to-go") {
  SUBCASE("goal nodes sit at zero, single arc reads its own cost") {
    const StateSpaceGraph g(2, 2, 0, {1}, {{0, 1, {3.0, 7.0}}});
    const auto table = per_scenario_bounds(g);
    CHECK(table[0 * 2 + 0] == 3.0);
    CHECK(table[0 * 2 + 1] == 7.0);
    CHECK(table[1 * 2 + 0] == 0.0);
    CHECK(table[1 * 2 + 1] == 0.0);
  }
  SUBCASE("matches exhaustive path enumeration on random graphs") {
    for (int trial = 0; trial < 15; ++trial) {
      GenerateParams params;
      params.num_nodes = 10;
      params.density = 0.4;
      params.m = 3;
      params.seed = 2000 + trial;
      const Instance inst = generate(params);
      const auto fast = per_scenario_bounds(inst.graph);
      const auto slow = testsup::brute_per_scenario_bounds(inst.graph);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) {
        if (std::isinf(slow[i])) {
          CHECK(std::isinf(fast[i]));
        } else {
          CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("scalarized cost-to-go") {
  const ProbabilityVector half({0.5, 0.5});
  SUBCASE("single arc") {
    const StateSpaceGraph g(2, 2, 0, {1}, {{0, 1, {3.0, 7.0}}});
    const auto table = scalar_bound(g, half);
    CHECK(table[0] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(table[1] == 0.0);
  }
  SUBCASE("matches exhaustive enumeration and never undercuts the per-scenario mix") {
    for (int trial = 0; trial < 15; ++trial) {
      GenerateParams params;
      params.num_nodes = 9;
      params.density = 0.4;
      params.m = 2;
      params.seed = 3000 + trial;
      const Instance inst = generate(params);
      const auto fast = scalar_bound(inst.graph, half);
      const auto slow = testsup::brute_scalar_bounds(inst.graph, half);
      const auto vec = per_scenario_bounds(inst.graph);
      for (int n = 0; n < inst.graph.num_nodes(); ++n) {
        if (std::isinf(slow[static_cast<std::size_t>(n)])) {
          CHECK(std::isinf(fast[static_cast<std::size_t>(n)]));
          continue;
        }
        CHECK(fast[static_cast<std::size_t>(n)] ==
              doctest::Approx(slow[static_cast<std::size_t>(n)]).epsilon(1e-9));
        const double mixed =
            0.5 * vec[static_cast<std::size_t>(n) * 2] + 0.5 * vec[static_cast<std::size_t>(n) * 2 + 1];
        CHECK(fast[static_cast<std::size_t>(n)] >= mixed - 1e-9);
      }
    }
  }
}

TEST_CASE("tables are consistent along arcs") {
  for (int trial = 0; trial < 10; ++trial) {
    GenerateParams params;
    params.num_nodes = 12;
    params.density = 0.35;
    params.m = 3;
    params.seed = 4000 + trial;
    const Instance inst = generate(params);
    const ProbabilityVector p = max_entropy(resolve_capacity(inst));
    for (double gamma : {1.0, 0.8}) {
      const HeuristicTables t = apply_gamma(build_heuristic_tables(inst.graph, p), gamma);
      for (NodeId n = 0; n < inst.graph.num_nodes(); ++n) {
        for (const auto& oa : inst.graph.out_arcs(n)) {
          const auto c = inst.graph.arc_cost(oa.arc);
          for (int i = 0; i < 3; ++i) {
            CHECK(t.vec(n)[i] <= c[i] + t.vec(oa.to)[i] + 1e-9);
          }
          double cbar = 0.0;
          for (int i = 0; i < 3; ++i) cbar += p[i] * c[i];
          CHECK(t.bar(n) <= cbar + t.bar(oa.to) + 1e-9);
        }
      }
      for (NodeId goal : inst.graph.goals()) {
        CHECK(t.bar(goal) == 0.0);
        for (int i = 0; i < 3; ++i) CHECK(t.vec(goal)[i] == 0.0);
      }
    }
  }
}

TEST_CASE("gamma scaling") {
  const StateSpaceGraph g(3, 2, 0, {2}, {{0, 1, {10.0, 20.0}}, {1, 2, {0.0, 0.0}}});
  const HeuristicTables exact = build_heuristic_tables(g, ProbabilityVector({0.5, 0.5}));

  SUBCASE("gamma = 1 leaves everything unchanged") {
    const HeuristicTables same = apply_gamma(exact, 1.0);
    CHECK(same.per_scenario == exact.per_scenario);
    CHECK(same.scalar == exact.scalar);
  }
  SUBCASE("finite entries scale") {
    const HeuristicTables scaled = apply_gamma(exact, 0.7);
    CHECK(scaled.vec(0)[0] == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(scaled.vec(0)[1] == doctest::Approx(14.0).epsilon(1e-12));
    CHECK(scaled.gamma == 0.7);
  }
  SUBCASE("out-of-range factors are rejected") {
    CHECK_THROWS_AS(apply_gamma(exact, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(apply_gamma(exact, 1.5), std::invalid_argument);
  }
  SUBCASE("infinite entries stay infinite") {
    // Node 1 has an arc to the goal but node 0 is start; add an unreachable node.
    const StateSpaceGraph g2(4, 2, 0, {2},
                             {{0, 1, {1.0, 1.0}}, {1, 2, {1.0, 1.0}}, {3, 0, {1.0, 1.0}}});
    const HeuristicTables t =
        apply_gamma(build_heuristic_tables(g2, ProbabilityVector({0.5, 0.5})), 0.7);
    CHECK(std::isinf(t.bar(3)) == false);  // node 3 reaches the goal through 0
    const StateSpaceGraph g3(4, 2, 0, {2},
                             {{0, 1, {1.0, 1.0}}, {1, 2, {1.0, 1.0}}, {0, 3, {1.0, 1.0}}});
    const HeuristicTables t3 =
        apply_gamma(build_heuristic_tables(g3, ProbabilityVector({0.5, 0.5})), 0.7);
    CHECK(std::isinf(t3.bar(3)));
    CHECK(std::isinf(t3.vec(3)[0]));
  }
}
