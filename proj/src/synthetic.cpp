#include "netforecast/synthetic.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace netforecast {

std::uint64_t DegreeSampler::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below(0)");
  // Unbiased rejection sampling.
  std::uint64_t x, r;
  do {
    x = eng_();
    r = x % bound;
  } while (x - r > std::numeric_limits<std::uint64_t>::max() - (bound - 1));
  return r;
}

int DegreeSampler::pick(const std::vector<int>& degree,
                        const std::vector<char>& excluded) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (!excluded[i]) total += static_cast<std::uint64_t>(degree[i]);
  }
  if (total == 0) {
    // No positive-degree candidate left; pick uniformly among the rest.
    std::uint64_t eligible = 0;
    for (char e : excluded) eligible += e ? 0 : 1;
    if (eligible == 0) throw std::invalid_argument("no eligible node to pick");
    std::uint64_t target = uniform_below(eligible);
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < degree.size(); ++i) {
      if (excluded[i]) continue;
      if (seen == target) return static_cast<int>(i) + 1;
      ++seen;
    }
    throw std::logic_error("uniform fallback failed");
  }
  std::uint64_t ticket = uniform_below(total);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (excluded[i]) continue;
    acc += static_cast<std::uint64_t>(degree[i]);
    if (ticket < acc) return static_cast<int>(i) + 1;
  }
  throw std::logic_error("weighted pick failed");
}

GraphSeries generate_pa_series(const PAConfig& cfg) {
  if (cfg.s < 1) throw std::invalid_argument("s must be >= 1");
  if (cfg.s0 <= cfg.s) throw std::invalid_argument("s0 must exceed s");
  if (cfg.nodes_per_step < 1) {
    throw std::invalid_argument("nodes_per_step must be >= 1");
  }
  if (cfg.steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (cfg.delete_per_step < 0) {
    throw std::invalid_argument("delete_per_step must be >= 0");
  }

  DegreeSampler rng(cfg.seed);
  int n = cfg.s0;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;

  auto commit = [&](int a, int b) {
    edges.push_back(make_edge(a, b));
    ++degree[static_cast<std::size_t>(a) - 1];
    ++degree[static_cast<std::size_t>(b) - 1];
  };

  // Ring seed: uniform initial degrees.
  if (cfg.s0 == 2) {
    commit(1, 2);
  } else {
    for (int i = 1; i < cfg.s0; ++i) commit(i, i + 1);
    commit(cfg.s0, 1);
  }

  auto snapshot = [&]() {
    Graph g(n);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
  };

  GraphSeries series;
  series.push_back(snapshot());

  for (int step = 2; step <= cfg.steps; ++step) {
    for (int arrival = 0; arrival < cfg.nodes_per_step; ++arrival) {
      ++n;
      degree.push_back(0);
      std::vector<char> excluded(static_cast<std::size_t>(n), 0);
      excluded[static_cast<std::size_t>(n) - 1] = 1;  // no self-loop
      std::vector<int> targets;
      targets.reserve(static_cast<std::size_t>(cfg.s));
      for (int e = 0; e < cfg.s; ++e) {
        int t = rng.pick(degree, excluded);
        excluded[static_cast<std::size_t>(t) - 1] = 1;
        targets.push_back(t);
      }
      for (int t : targets) commit(n, t);
    }
    if (cfg.delete_per_step > 0) {
      if (static_cast<std::size_t>(cfg.delete_per_step) > edges.size()) {
        throw std::invalid_argument(
            "delete_per_step=" + std::to_string(cfg.delete_per_step) +
            " exceeds the " + std::to_string(edges.size()) +
            " edges present at step " + std::to_string(step));
      }
      for (int d = 0; d < cfg.delete_per_step; ++d) {
        std::size_t idx =
            static_cast<std::size_t>(rng.uniform_below(edges.size()));
        const auto [a, b] = edges[idx];
        --degree[static_cast<std::size_t>(a) - 1];
        --degree[static_cast<std::size_t>(b) - 1];
        edges[idx] = edges.back();
        edges.pop_back();
      }
    }
    series.push_back(snapshot());
  }
  return series;
}

}  // namespace netforecast
