#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "netforecast/graph.hpp"

namespace netforecast {

// Preferential-attachment sequence generator. G_1 is a ring on s0 nodes
// (s0 edges); each later step adds nodes_per_step nodes, each drawing s
// distinct endpoints with probability proportional to current degree, then
// uniformly deletes delete_per_step existing edges.
struct PAConfig {
  int s0 = 50;
  int s = 10;
  int nodes_per_step = 5;
  int steps = 30;
  int delete_per_step = 0;
  std::uint64_t seed = 1;
};

GraphSeries generate_pa_series(const PAConfig& cfg);

// Degree-proportional endpoint chooser used by the generator; exposed so the
// attachment distribution itself can be tested. pick() returns a node in
// 1..|deg| drawn with probability deg[node-1] / sum(deg); excluded nodes
// carry no mass. Falls back to a uniform draw over non-excluded nodes when
// all eligible weights are zero. Draws use hand-rolled rejection sampling on
// top of mt19937_64 so the sequence is identical on every platform.
class DegreeSampler {
 public:
  explicit DegreeSampler(std::uint64_t seed) : eng_(seed) {}

  int pick(const std::vector<int>& degree, const std::vector<char>& excluded);
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 eng_;
};

}  // namespace netforecast
