#include "choqpath/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "choqpath/heuristics.hpp"
#include "choqpath/rng.hpp"
#include "choqpath/search_mo.hpp"
#include "choqpath/search_rank.hpp"
#include "json.hpp"

namespace choqpath {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t instance_seed_for(std::uint64_t base, int size, int m, int seed_index) {
  return SplitMix64(base ^ (static_cast<std::uint64_t>(size) << 32) ^
                    (static_cast<std::uint64_t>(m) << 16) ^
                    static_cast<std::uint64_t>(seed_index))
      .next();
}

ProbabilityVector bound_vector(const std::string& bound, const Capacity& v) {
  if (bound == "maxent") return max_entropy(v);
  if (bound == "shapley") return shapley(v);
  throw std::invalid_argument("bench: bound must be 'maxent' or 'shapley'");
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  for (const std::string& a : config.algorithms) {
    if (a != "mo" && a != "rank") {
      throw std::invalid_argument("bench: algorithm must be 'mo' or 'rank'");
    }
  }
  if (config.seeds_per_cell < 1) {
    throw std::invalid_argument("bench: seeds_per_cell must be >= 1");
  }

  BenchReport report;
  report.config = config;

  for (int size : config.sizes) {
    for (int m : config.scenario_counts) {
      for (int seed_index = 0; seed_index < config.seeds_per_cell; ++seed_index) {
        const std::uint64_t seed =
            instance_seed_for(config.base_seed, size, m, seed_index);
        GenerateParams params;
        params.num_nodes = size;
        params.density = config.density;
        params.m = m;
        params.capacity_kind = config.capacity_kind;
        params.seed = seed;
        params.alpha = config.alpha;
        const Instance instance = generate(params);
        const Capacity v = resolve_capacity(instance);
        const DisutilityFn w = resolve_disutility(instance);
        const double gamma = config.gamma ? *config.gamma : draw_gamma(seed);

        std::vector<std::pair<std::string, double>> psis;
        for (const std::string& bound : config.bounds) {
          for (const std::string& algorithm : config.algorithms) {
            BenchRun run;
            run.algorithm = algorithm;
            run.bound = bound;
            run.num_nodes = size;
            run.m = m;
            run.seed_index = seed_index;
            run.instance_seed = seed;
            run.gamma = gamma;

            const auto execute = [&](double& heuristic_seconds) {
              if (algorithm == "mo") {
                const auto t0 = Clock::now();
                const ProbabilityVector p = bound_vector(bound, v);
                HeuristicTables tables =
                    apply_gamma(build_heuristic_tables(instance.graph, p), gamma);
                heuristic_seconds = seconds_since(t0);
                return solve_mo(instance.graph, v, w, p, tables);
              }
              const auto t0 = Clock::now();
              const ProbabilityVector p = bound_vector(bound, v);
              HeuristicTables tables;
              tables.m = m;
              tables.scalar = scalar_bound(instance.graph, p);
              tables = apply_gamma(std::move(tables), gamma);
              heuristic_seconds = seconds_since(t0);
              return solve_rank(instance.graph, v, w, p, tables.scalar);
            };

            Solution sol = execute(run.heuristic_seconds);
            run.search_seconds = sol.stats.search_seconds;

            // Sub-resolution cells: the first execution doubles as warmup and
            // the reported timing is the median over enough repetitions to
            // rise above scheduler noise and transient load spikes. Stats
            // always come from the first run.
            const double first = run.heuristic_seconds + run.search_seconds;
            if (first < 0.08) {
              const int reps = static_cast<int>(
                  std::min(50.0, std::ceil(0.4 / std::max(first, 0.004))));
              std::vector<std::pair<double, double>> samples;  // (total, heuristic)
              samples.reserve(static_cast<std::size_t>(reps));
              for (int rep = 0; rep < reps; ++rep) {
                double heur = 0.0;
                const Solution again = execute(heur);
                samples.emplace_back(heur + again.stats.search_seconds, heur);
              }
              std::nth_element(samples.begin(), samples.begin() + samples.size() / 2,
                               samples.end());
              const auto& median = samples[samples.size() / 2];
              run.heuristic_seconds = median.second;
              run.search_seconds = median.first - median.second;
            }
            run.total_seconds = run.heuristic_seconds + run.search_seconds;
            run.psi = sol.psi;
            run.stats = sol.stats;
            run.stats.search_seconds = run.search_seconds;
            psis.emplace_back(algorithm + "/" + bound, sol.psi);
            report.runs.push_back(std::move(run));
          }
        }

        double max_delta = 0.0;
        for (std::size_t a = 0; a < psis.size(); ++a) {
          for (std::size_t b = a + 1; b < psis.size(); ++b) {
            max_delta = std::max(max_delta, std::abs(psis[a].second - psis[b].second));
          }
        }
        if (max_delta > config.agreement_tol) {
          BenchDisagreement d;
          d.num_nodes = size;
          d.m = m;
          d.seed_index = seed_index;
          d.instance_seed = seed;
          d.gamma = gamma;
          d.max_delta = max_delta;
          d.psis = std::move(psis);
          d.instance_json = save_instance(instance);
          report.disagreement = std::move(d);
          return report;
        }
      }
    }
  }

  // Aggregate cells.
  for (const std::string& algorithm : config.algorithms) {
    for (int size : config.sizes) {
      for (int m : config.scenario_counts) {
        for (const std::string& bound : config.bounds) {
          BenchCell cell;
          cell.algorithm = algorithm;
          cell.bound = bound;
          cell.num_nodes = size;
          cell.m = m;
          for (const BenchRun& run : report.runs) {
            if (run.algorithm != algorithm || run.bound != bound ||
                run.num_nodes != size || run.m != m) {
              continue;
            }
            ++cell.runs;
            cell.mean_total_seconds += run.total_seconds;
            cell.mean_search_seconds += run.search_seconds;
            cell.mean_heuristic_seconds += run.heuristic_seconds;
            cell.mean_labels_created += static_cast<double>(run.stats.labels_created);
            cell.mean_labels_expanded += static_cast<double>(run.stats.labels_expanded);
          }
          if (cell.runs > 0) {
            cell.mean_total_seconds /= cell.runs;
            cell.mean_search_seconds /= cell.runs;
            cell.mean_heuristic_seconds /= cell.runs;
            cell.mean_labels_created /= cell.runs;
            cell.mean_labels_expanded /= cell.runs;
            report.cells.push_back(std::move(cell));
          }
        }
      }
    }
  }
  return report;
}

std::string bench_report_json(const BenchReport& report) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json j;
  ordered_json cfg;
  cfg["sizes"] = report.config.sizes;
  cfg["scenario_counts"] = report.config.scenario_counts;
  cfg["seeds_per_cell"] = report.config.seeds_per_cell;
  cfg["algorithms"] = report.config.algorithms;
  cfg["bounds"] = report.config.bounds;
  if (report.config.gamma) {
    cfg["gamma"] = *report.config.gamma;
  } else {
    cfg["gamma"] = "per-instance draw in [0.7,1)";
  }
  cfg["density"] = report.config.density;
  cfg["capacity_kind"] = report.config.capacity_kind;
  cfg["alpha"] = report.config.alpha;
  cfg["base_seed"] = report.config.base_seed;
  j["config"] = std::move(cfg);

  ordered_json runs = ordered_json::array();
  for (const BenchRun& run : report.runs) {
    ordered_json r;
    r["algorithm"] = run.algorithm;
    r["bound"] = run.bound;
    r["num_nodes"] = run.num_nodes;
    r["m"] = run.m;
    r["seed_index"] = run.seed_index;
    r["instance_seed"] = run.instance_seed;
    r["gamma"] = run.gamma;
    r["psi"] = run.psi;
    r["heuristic_seconds"] = run.heuristic_seconds;
    r["search_seconds"] = run.search_seconds;
    r["total_seconds"] = run.total_seconds;
    r["labels_created"] = run.stats.labels_created;
    r["labels_expanded"] = run.stats.labels_expanded;
    r["pruned_rule1"] = run.stats.pruned_rule1;
    r["pruned_rule2"] = run.stats.pruned_rule2;
    r["pruned_cycle"] = run.stats.pruned_cycle;
    r["paths_enumerated"] = run.stats.paths_enumerated;
    runs.push_back(std::move(r));
  }
  j["runs"] = std::move(runs);

  ordered_json cells = ordered_json::array();
  for (const BenchCell& cell : report.cells) {
    ordered_json c;
    c["algorithm"] = cell.algorithm;
    c["bound"] = cell.bound;
    c["num_nodes"] = cell.num_nodes;
    c["m"] = cell.m;
    c["runs"] = cell.runs;
    c["mean_total_seconds"] = cell.mean_total_seconds;
    c["mean_search_seconds"] = cell.mean_search_seconds;
    c["mean_heuristic_seconds"] = cell.mean_heuristic_seconds;
    c["mean_labels_created"] = cell.mean_labels_created;
    c["mean_labels_expanded"] = cell.mean_labels_expanded;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);

  if (report.disagreement) {
    const BenchDisagreement& d = *report.disagreement;
    ordered_json dj;
    dj["num_nodes"] = d.num_nodes;
    dj["m"] = d.m;
    dj["seed_index"] = d.seed_index;
    dj["instance_seed"] = d.instance_seed;
    dj["gamma"] = d.gamma;
    dj["max_delta"] = d.max_delta;
    ordered_json psis;
    for (const auto& [name, psi] : d.psis) psis[name] = psi;
    dj["psis"] = std::move(psis);
    dj["instance"] = ordered_json::parse(d.instance_json);
    j["disagreement"] = std::move(dj);
  }
  return j.dump(2) + "\n";
}

std::string bench_table(const BenchReport& report) {
  // Mean total seconds per cell, Table-style: one row per algorithm x size,
  // one column per scenario count x bound.
  const auto& cfg = report.config;
  std::map<std::tuple<std::string, int, int, std::string>, double> mean;
  for (const BenchCell& cell : report.cells) {
    mean[{cell.algorithm, cell.num_nodes, cell.m, cell.bound}] = cell.mean_total_seconds;
  }

  std::ostringstream out;
  out << std::left << std::setw(6) << "alg" << std::setw(8) << "N";
  for (int m : cfg.scenario_counts) {
    for (const std::string& bound : cfg.bounds) {
      out << std::right << std::setw(14) << (std::to_string(m) + "s/" + bound);
    }
  }
  out << "\n";
  for (const std::string& algorithm : cfg.algorithms) {
    for (int size : cfg.sizes) {
      out << std::left << std::setw(6) << algorithm << std::setw(8) << size;
      for (int m : cfg.scenario_counts) {
        for (const std::string& bound : cfg.bounds) {
          const auto it = mean.find({algorithm, size, m, bound});
          if (it == mean.end()) {
            out << std::right << std::setw(14) << "-";
          } else {
            out << std::right << std::setw(14) << std::fixed << std::setprecision(3)
                << it->second;
          }
        }
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace choqpath
