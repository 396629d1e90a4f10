#pragma once

#include <optional>
#include <string>

#include "choqpath/generator.hpp"
#include "choqpath/search.hpp"

namespace choqpath {

struct BenchConfig {
  std::vector<int> sizes{1000, 2000, 3000};
  std::vector<int> scenario_counts{3, 5, 10};
  int seeds_per_cell = 5;
  std::vector<std::string> algorithms{"mo", "rank"};
  std::vector<std::string> bounds{"maxent", "shapley"};
  /// Fixed heuristic scale factor; empty means a fresh per-instance draw in
  /// [0.7, 1) from the instance seed's gamma stream.
  std::optional<double> gamma;
  double density = 0.45;
  std::string capacity_kind = "v1";
  double alpha = 2.0;
  std::uint64_t base_seed = 1;
  /// Tolerance for the cross-algorithm agreement check.
  double agreement_tol = 1e-9;
};

/// One solver execution. Timings exclude instance generation; heuristic
/// construction is timed separately and included in total_seconds.
struct BenchRun {
  std::string algorithm;
  std::string bound;
  int num_nodes = 0;
  int m = 0;
  int seed_index = 0;
  std::uint64_t instance_seed = 0;
  double gamma = 1.0;
  double psi = 0.0;
  double heuristic_seconds = 0.0;
  double search_seconds = 0.0;
  double total_seconds = 0.0;
  SearchStats stats;
};

/// Mean timings and label counts over the seeds of one
/// (algorithm, bound, size, scenario count) cell.
struct BenchCell {
  std::string algorithm;
  std::string bound;
  int num_nodes = 0;
  int m = 0;
  int runs = 0;
  double mean_total_seconds = 0.0;
  double mean_search_seconds = 0.0;
  double mean_heuristic_seconds = 0.0;
  double mean_labels_created = 0.0;
  double mean_labels_expanded = 0.0;
};

/// Filled when two algorithms disagree on an instance; carries everything
/// needed to reproduce the failure.
struct BenchDisagreement {
  int num_nodes = 0;
  int m = 0;
  int seed_index = 0;
  std::uint64_t instance_seed = 0;
  double gamma = 1.0;
  double max_delta = 0.0;
  std::vector<std::pair<std::string, double>> psis;  // "algorithm/bound" -> psi
  std::string instance_json;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchRun> runs;
  std::vector<BenchCell> cells;
  std::optional<BenchDisagreement> disagreement;
};

/// Runs the full cross-product of sizes x scenario counts x seeds x
/// algorithms x bounds. Every solver pair must agree on each instance's
/// optimal value; the harness stops at the first disagreement and reports it.
/// The per-instance seed is SplitMix64(base_seed ^ (size << 32) ^ (m << 16)
/// ^ seed_index).next().
BenchReport run_bench(const BenchConfig& config);

/// Machine-readable report: config echo, one record per run, cell aggregates.
std::string bench_report_json(const BenchReport& report);

/// Fixed-width summary table (rows: algorithm x size; columns: scenario
/// count x bound; mean total seconds per cell).
std::string bench_table(const BenchReport& report);

}  // namespace choqpath
