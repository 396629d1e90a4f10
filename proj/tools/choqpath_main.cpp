// choqpath: generate, solve, verify and benchmark robust path instances.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "choqpath/bench.hpp"
#include "choqpath/heuristics.hpp"
#include "choqpath/oracle.hpp"
#include "choqpath/search_mo.hpp"
#include "choqpath/search_rank.hpp"
#include "json.hpp"

namespace {

using namespace choqpath;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t metadata_seed(const Instance& instance) {
  const auto meta = nlohmann::json::parse(instance.metadata_json);
  if (meta.contains("seed") && meta["seed"].is_number()) {
    return meta["seed"].get<std::uint64_t>();
  }
  return 0;
}

double resolve_gamma(const std::string& gamma_arg, const Instance& instance) {
  if (gamma_arg == "paper") return draw_gamma(metadata_seed(instance));
  const double gamma = std::stod(gamma_arg);
  if (!(gamma > 0.0) || gamma > 1.0) {
    throw std::runtime_error("--gamma must be 'paper' or a value in (0, 1]");
  }
  return gamma;
}

ProbabilityVector bound_vector(const std::string& bound, const Capacity& v) {
  if (bound == "maxent") return max_entropy(v);
  return shapley(v);
}

struct SolveOutcome {
  Solution solution;
  double gamma = 1.0;
  double heuristic_seconds = 0.0;
};

SolveOutcome run_solver(const Instance& instance, const std::string& algorithm,
                        const std::string& bound, const std::string& gamma_arg) {
  const Capacity v = resolve_capacity(instance);
  const DisutilityFn w = resolve_disutility(instance);
  const double gamma = resolve_gamma(gamma_arg, instance);

  SolveOutcome out;
  out.gamma = gamma;
  const auto t0 = Clock::now();
  const ProbabilityVector p = bound_vector(bound, v);
  if (algorithm == "mo") {
    const HeuristicTables tables =
        apply_gamma(build_heuristic_tables(instance.graph, p), gamma);
    out.heuristic_seconds = seconds_since(t0);
    out.solution = solve_mo(instance.graph, v, w, p, tables);
  } else {
    HeuristicTables tables;
    tables.m = instance.graph.m();
    tables.scalar = scalar_bound(instance.graph, p);
    tables = apply_gamma(std::move(tables), gamma);
    out.heuristic_seconds = seconds_since(t0);
    out.solution = solve_rank(instance.graph, v, w, p, tables.scalar);
  }
  return out;
}

std::string format_vector(const CostVector& x) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ", ";
    out << x[i];
  }
  out << "]";
  return out.str();
}

std::string format_path(const Path& path) {
  std::ostringstream out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out << " -> ";
    out << path[i];
  }
  return out.str();
}

void print_report(const std::string& algorithm, const std::string& bound,
                  const SolveOutcome& out, bool as_json) {
  const Solution& sol = out.solution;
  if (as_json) {
    nlohmann::ordered_json j;
    j["algorithm"] = algorithm;
    j["bound"] = bound;
    j["gamma"] = out.gamma;
    j["psi"] = sol.psi;
    j["cost"] = sol.cost;
    j["path"] = sol.path;
    j["labels_created"] = sol.stats.labels_created;
    j["labels_expanded"] = sol.stats.labels_expanded;
    j["pruned_rule1"] = sol.stats.pruned_rule1;
    j["pruned_rule2"] = sol.stats.pruned_rule2;
    j["pruned_cycle"] = sol.stats.pruned_cycle;
    j["paths_enumerated"] = sol.stats.paths_enumerated;
    j["heuristic_seconds"] = out.heuristic_seconds;
    j["search_seconds"] = sol.stats.search_seconds;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "algorithm:        " << algorithm << " (bound: " << bound
            << ", gamma: " << out.gamma << ")\n"
            << "psi:              " << std::setprecision(17) << sol.psi << "\n"
            << "cost:             " << format_vector(sol.cost) << "\n"
            << "path:             " << format_path(sol.path) << "\n"
            << "labels created:   " << sol.stats.labels_created << "\n"
            << "labels expanded:  " << sol.stats.labels_expanded << "\n"
            << "pruned (rule 1):  " << sol.stats.pruned_rule1 << "\n"
            << "pruned (rule 2):  " << sol.stats.pruned_rule2 << "\n"
            << "pruned (cycles):  " << sol.stats.pruned_cycle << "\n";
  if (algorithm == "rank") {
    std::cout << "paths enumerated: " << sol.stats.paths_enumerated << "\n";
  }
  std::cout << "heuristic time:   " << out.heuristic_seconds << " s\n"
            << "search time:      " << sol.stats.search_seconds << " s\n";
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> split_csv_int(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : split_csv(text)) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Choquet-expected-disutility optimal paths in scenario-valued graphs"};
  app.require_subcommand(1);

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  GenerateParams gen_params;
  std::string gen_out;
  gen->add_option("--nodes", gen_params.num_nodes, "Node count")->required();
  gen->add_option("--density", gen_params.density, "Arc probability per ordered pair")
      ->default_val(0.45);
  gen->add_option("--scenarios", gen_params.m, "Scenario count")->required();
  gen->add_option("--capacity", gen_params.capacity_kind, "Capacity kind: v1 or v2")
      ->default_val("v1");
  gen->add_option("--seed", gen_params.seed, "Generator seed")->default_val(0);
  gen->add_option("--alpha", gen_params.alpha, "Disutility exponent")->default_val(2.0);
  gen->add_option("--out", gen_out, "Output instance file")->required();

  // --- solve ---
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  std::string solve_instance, solve_algorithm = "mo", solve_bound = "maxent",
              solve_gamma = "1.0";
  bool solve_json = false;
  solve->add_option("--instance", solve_instance, "Instance file")->required();
  solve->add_option("--algorithm", solve_algorithm, "mo or rank")
      ->check(CLI::IsMember({"mo", "rank"}));
  solve->add_option("--bound", solve_bound, "Scalarization vector: shapley or maxent")
      ->check(CLI::IsMember({"shapley", "maxent"}));
  solve->add_option("--gamma", solve_gamma, "Heuristic scale in (0,1] or 'paper'");
  solve->add_flag("--json", solve_json, "Machine-readable output");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "Run both solvers and the exhaustive oracle");
  std::string verify_instance, verify_bound = "maxent", verify_gamma = "1.0";
  std::uint64_t verify_cap = 1'000'000;
  verify->add_option("--instance", verify_instance, "Instance file")->required();
  verify->add_option("--bound", verify_bound, "shapley or maxent")
      ->check(CLI::IsMember({"shapley", "maxent"}));
  verify->add_option("--gamma", verify_gamma, "Heuristic scale in (0,1] or 'paper'");
  verify->add_option("--cap", verify_cap, "Oracle simple-path cap");

  // --- bench ---
  auto* bench = app.add_subcommand("bench", "Timing harness over generated instances");
  BenchConfig config;
  std::string bench_sizes = "1000,2000,3000", bench_scenarios = "3,5,10";
  std::string bench_algorithms = "mo,rank", bench_bounds = "maxent,shapley";
  std::string bench_gamma = "paper", bench_out;
  bench->add_option("--sizes", bench_sizes, "Node counts, comma separated");
  bench->add_option("--scenarios", bench_scenarios, "Scenario counts, comma separated");
  bench->add_option("--seeds", config.seeds_per_cell, "Seeds per cell")->default_val(5);
  bench->add_option("--algorithms", bench_algorithms, "Subset of mo,rank");
  bench->add_option("--bounds", bench_bounds, "Subset of maxent,shapley");
  bench->add_option("--gamma", bench_gamma, "Heuristic scale in (0,1] or 'paper'");
  bench->add_option("--density", config.density, "Arc density")->default_val(0.45);
  bench->add_option("--capacity", config.capacity_kind, "v1 or v2")->default_val("v1");
  bench->add_option("--alpha", config.alpha, "Disutility exponent")->default_val(2.0);
  bench->add_option("--base-seed", config.base_seed, "Base seed")->default_val(1);
  bench->add_option("--out", bench_out, "Write the machine-readable report here");

  try {
    app.parse(argc, argv);

    if (gen->parsed()) {
      const Instance instance = generate(gen_params);
      save_instance_file(instance, gen_out);
      std::cout << "wrote " << gen_out << ": " << instance.graph.num_nodes() << " nodes, "
                << instance.graph.num_arcs() << " arcs, " << instance.graph.m()
                << " scenarios, capacity " << gen_params.capacity_kind << "\n";
      return 0;
    }

    if (solve->parsed()) {
      const Instance instance = load_instance_file(solve_instance);
      const SolveOutcome out = run_solver(instance, solve_algorithm, solve_bound, solve_gamma);
      print_report(solve_algorithm, solve_bound, out, solve_json);
      return 0;
    }

    if (verify->parsed()) {
      const Instance instance = load_instance_file(verify_instance);
      const Capacity v = resolve_capacity(instance);
      const DisutilityFn w = resolve_disutility(instance);
      const SolveOutcome mo = run_solver(instance, "mo", verify_bound, verify_gamma);
      const SolveOutcome rank = run_solver(instance, "rank", verify_bound, verify_gamma);
      std::cout << "mo psi:     " << std::setprecision(17) << mo.solution.psi << "\n";
      std::cout << "rank psi:   " << rank.solution.psi << "\n";
      bool oracle_ok = true;
      try {
        const Solution brute = brute_force_optimum(instance.graph, v, w, verify_cap);
        std::cout << "oracle psi: " << brute.psi << " (" << brute.stats.paths_enumerated
                  << " simple paths)\n";
        oracle_ok = std::abs(mo.solution.psi - brute.psi) <= 1e-9 &&
                    std::abs(rank.solution.psi - brute.psi) <= 1e-9;
      } catch (const std::runtime_error& e) {
        std::cout << "oracle skipped: " << e.what() << "\n";
      }
      const bool solvers_agree = std::abs(mo.solution.psi - rank.solution.psi) <= 1e-9;
      if (solvers_agree && oracle_ok) {
        std::cout << "agreement: yes\n";
        return 0;
      }
      std::cout << "agreement: NO\n";
      return 1;
    }

    // bench
    config.sizes = split_csv_int(bench_sizes);
    config.scenario_counts = split_csv_int(bench_scenarios);
    config.algorithms = split_csv(bench_algorithms);
    config.bounds = split_csv(bench_bounds);
    if (bench_gamma != "paper") config.gamma = std::stod(bench_gamma);

    const BenchReport report = run_bench(config);
    if (!bench_out.empty()) {
      std::ofstream out(bench_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open '" + bench_out + "' for writing");
      out << bench_report_json(report);
    }
    if (report.disagreement) {
      const BenchDisagreement& d = *report.disagreement;
      const std::string repro = "bench_disagreement_" + std::to_string(d.instance_seed);
      std::ofstream(repro + ".instance.json", std::ios::binary) << d.instance_json;
      nlohmann::ordered_json info;
      info["num_nodes"] = d.num_nodes;
      info["m"] = d.m;
      info["seed_index"] = d.seed_index;
      info["instance_seed"] = d.instance_seed;
      info["gamma"] = d.gamma;
      info["max_delta"] = d.max_delta;
      for (const auto& [name, psi] : d.psis) info["psis"][name] = psi;
      std::ofstream(repro + ".json", std::ios::binary) << info.dump(2) << "\n";
      std::cerr << "solver disagreement (max delta " << d.max_delta << "); repro bundle: "
                << repro << ".{json,instance.json}\n";
      return 1;
    }
    std::cout << bench_table(report);
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
