#pragma once

#include <cstdint>
#include <string>

#include "choqpath/instance.hpp"

namespace choqpath {

/// Random instance parameters. Node 0 is the start, the last node the single
/// goal; every ordered node pair independently receives an arc with the given
/// density; arc costs are integers drawn uniformly in [0, 100] per scenario.
struct GenerateParams {
  int num_nodes = 0;
  double density = 0.45;
  int m = 0;
  std::string capacity_kind = "v1";  // "v1" or "v2" (random Mobius masses)
  std::uint64_t seed = 0;
  double alpha = 2.0;  // disutility exponent recorded in the instance
  int max_retries = 32;
};

/// Deterministic for a given seed; redraws the arc set (bounded retries) until
/// the goal is reachable and throws std::runtime_error when the retry budget
/// is exhausted.
Instance generate(const GenerateParams& params);

/// The gamma draw used by benchmark runs: uniform in [0.7, 1) from the gamma
/// stream of the given seed.
double draw_gamma(std::uint64_t seed);

}  // namespace choqpath
