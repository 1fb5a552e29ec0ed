#include <doctest.h>

#include <stdexcept>

#include <set>
#include <vector>

#include "netforecast/forecast.hpp"
#include "netforecast/synthetic.hpp"

using namespace netforecast;

TEST_CASE("node and edge counts follow the generator arithmetic") {
  PAConfig cfg;
  cfg.s0 = 8;
  cfg.s = 3;
  cfg.nodes_per_step = 2;
  cfg.steps = 6;
  cfg.seed = 7;
  const GraphSeries s = generate_pa_series(cfg);
  REQUIRE(s.length() == 6);
  for (int t = 1; t <= 6; ++t) {
    CHECK(s.at(t).n_nodes() == 8 + (t - 1) * 2);
    CHECK(s.at(t).n_edges() == 8 + (t - 1) * 2 * 3);
  }
}

TEST_CASE("without deletion the edge sets are cumulative") {
  PAConfig cfg;
  cfg.s0 = 6;
  cfg.s = 2;
  cfg.nodes_per_step = 3;
  cfg.steps = 5;
  cfg.seed = 11;
  const GraphSeries s = generate_pa_series(cfg);
  for (int t = 1; t < s.length(); ++t) {
    for (const Edge& e : s.at(t).edges()) {
      CHECK(s.at(t + 1).edges().count(e) == 1);
    }
  }
}

TEST_CASE("a single arrival adds exactly s distinct edges") {
  PAConfig cfg;
  cfg.s0 = 5;
  cfg.s = 3;
  cfg.nodes_per_step = 1;
  cfg.steps = 2;
  cfg.seed = 3;
  const GraphSeries s = generate_pa_series(cfg);
  CHECK(s.at(2).n_edges() - s.at(1).n_edges() == 3);
  CHECK(s.at(2).degree(6) == 3);
}

TEST_CASE("same seed reproduces the series, different seeds diverge") {
  PAConfig cfg;
  cfg.s0 = 10;
  cfg.s = 2;
  cfg.nodes_per_step = 2;
  cfg.steps = 8;
  cfg.seed = 42;
  const GraphSeries a = generate_pa_series(cfg);
  const GraphSeries b = generate_pa_series(cfg);
  REQUIRE(a.length() == b.length());
  for (int t = 1; t <= a.length(); ++t) CHECK(a.at(t) == b.at(t));

  cfg.seed = 43;
  const GraphSeries c = generate_pa_series(cfg);
  bool all_equal = true;
  for (int t = 1; t <= a.length(); ++t) {
    if (!(a.at(t) == c.at(t))) all_equal = false;
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("experiment-1 count series match the stated arithmetic") {
  PAConfig cfg;  // defaults are the experiment-1 configuration
  cfg.seed = 1;
  const GraphSeries s = generate_pa_series(cfg).prefix(25);
  const auto nodes = extract_count_series(s, CountKind::nodes);
  const auto edges = extract_count_series(s, CountKind::edges);
  for (int t = 1; t <= 25; ++t) {
    CHECK(nodes.values[static_cast<std::size_t>(t) - 1] ==
          doctest::Approx(50.0 + 5.0 * (t - 1)));
    CHECK(edges.values[static_cast<std::size_t>(t) - 1] ==
          doctest::Approx(50.0 + 50.0 * (t - 1)));
  }
  CHECK(nodes.values.back() == doctest::Approx(170.0));
}

TEST_CASE("new nodes arrive with degree s when steps add one node") {
  PAConfig cfg;
  cfg.s0 = 30;
  cfg.s = 10;
  cfg.nodes_per_step = 1;
  cfg.steps = 12;
  cfg.seed = 2;
  const GraphSeries s = generate_pa_series(cfg);
  CHECK(average_new_node_degree(s) == doctest::Approx(10.0));

  // With several arrivals per step, later arrivals may attach to earlier
  // ones, so first-appearance degrees sit at or slightly above s.
  PAConfig batch;
  batch.seed = 2;
  const double d_avg = average_new_node_degree(generate_pa_series(batch));
  CHECK(d_avg >= 10.0);
  CHECK(d_avg < 10.5);
}

TEST_CASE("deletions remove exactly delete_per_step edges after additions") {
  PAConfig cfg;
  cfg.s0 = 10;
  cfg.s = 2;
  cfg.nodes_per_step = 3;
  cfg.steps = 6;
  cfg.delete_per_step = 4;
  cfg.seed = 5;
  const GraphSeries s = generate_pa_series(cfg);
  for (int t = 1; t <= 6; ++t) {
    CHECK(s.at(t).n_edges() == 10 + (t - 1) * (3 * 2 - 4));
  }
  // deletions make edge sets non-cumulative
  bool some_removed = false;
  for (int t = 1; t < s.length() && !some_removed; ++t) {
    for (const Edge& e : s.at(t).edges()) {
      if (!s.at(t + 1).edges().count(e)) some_removed = true;
    }
  }
  CHECK(some_removed);
}

TEST_CASE("excessive deletion is rejected with the parameter named") {
  PAConfig cfg;
  cfg.s0 = 4;
  cfg.s = 1;
  cfg.nodes_per_step = 1;
  cfg.steps = 2;
  cfg.delete_per_step = 100;
  CHECK_THROWS_WITH_AS(generate_pa_series(cfg),
                       doctest::Contains("delete_per_step"),
                       std::invalid_argument);
}

TEST_CASE("config validation") {
  PAConfig cfg;
  cfg.s0 = 3;
  cfg.s = 3;
  CHECK_THROWS_AS(generate_pa_series(cfg), std::invalid_argument);
  cfg = PAConfig{};
  cfg.s = 0;
  CHECK_THROWS_AS(generate_pa_series(cfg), std::invalid_argument);
  cfg = PAConfig{};
  cfg.nodes_per_step = 0;
  CHECK_THROWS_AS(generate_pa_series(cfg), std::invalid_argument);
}

TEST_CASE("attachment frequency is proportional to degree") {
  // Nodes with degree 2, 4, and 2: the middle node should be picked about
  // twice as often as either neighbor.
  DegreeSampler sampler(123);
  const std::vector<int> degree = {2, 4, 2};
  const std::vector<char> excluded = {0, 0, 0};
  int hits[3] = {0, 0, 0};
  const int draws = 40000;
  for (int i = 0; i < draws; ++i) {
    ++hits[sampler.pick(degree, excluded) - 1];
  }
  const double mid = static_cast<double>(hits[1]) / draws;
  CHECK(mid == doctest::Approx(0.5).epsilon(0.03));
  const double ratio =
      static_cast<double>(hits[1]) / static_cast<double>(hits[0] + hits[2]);
  CHECK(ratio == doctest::Approx(1.0).epsilon(0.06));

  // Excluded nodes carry no mass.
  const std::vector<char> block_mid = {0, 1, 0};
  for (int i = 0; i < 100; ++i) {
    CHECK(sampler.pick(degree, block_mid) != 2);
  }
}
