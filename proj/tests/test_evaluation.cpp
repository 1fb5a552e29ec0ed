#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "netforecast/evaluation.hpp"
#include "netforecast/synthetic.hpp"

using namespace netforecast;

namespace {

Graph path4() {
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  return g;
}

}  // namespace

TEST_CASE("node_error") {
  const Graph g = path4();
  CHECK(node_error(g, g) == 0.0);
  CHECK(node_error(Graph(8), Graph(4)) == doctest::Approx(1.0));
  Graph pred(170);
  Graph actual(175);
  CHECK(node_error(pred, actual) == doctest::Approx(5.0 / 175.0));
}

TEST_CASE("edge_error") {
  const Graph g = path4();
  CHECK(edge_error(g, g) == 0.0);
  CHECK(edge_error(Graph(4), g) == doctest::Approx(1.0));  // edgeless pred
  Graph pred(200);
  Graph actual(200);
  for (int i = 1; i <= 100; ++i) actual.add_edge(i, i + 100);
  for (int i = 1; i <= 101; ++i) {
    if (i <= 100) pred.add_edge(i, i + 100);
  }
  pred.add_edge(1, 2);
  CHECK(edge_error(pred, actual) == doctest::Approx(0.01));
  CHECK_THROWS_AS(edge_error(g, Graph(4)), std::invalid_argument);
}

TEST_CASE("density_error") {
  const Graph g = path4();
  CHECK(density_error(g, g) == 0.0);
  Graph complete(3);
  complete.add_edge(1, 2);
  complete.add_edge(1, 3);
  complete.add_edge(2, 3);
  CHECK(density_error(complete, Graph(3)) == doctest::Approx(1.0));
  // same density at different sizes
  Graph k3(3);
  k3.add_edge(1, 2);
  k3.add_edge(1, 3);
  k3.add_edge(2, 3);
  Graph k4(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) k4.add_edge(i, j);
  CHECK(density_error(k3, k4) == doctest::Approx(0.0));
}

TEST_CASE("edge_jaccard diagnostic") {
  const Graph g = path4();
  CHECK(edge_jaccard(g, g) == doctest::Approx(1.0));
  CHECK(edge_jaccard(Graph(4), Graph(4)) == doctest::Approx(1.0));
  Graph half(4);
  half.add_edge(1, 2);
  CHECK(edge_jaccard(half, g) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("last_seen_baseline returns G_T at every horizon") {
  PAConfig cfg;
  cfg.s0 = 6;
  cfg.s = 2;
  cfg.nodes_per_step = 1;
  cfg.steps = 5;
  const GraphSeries s = generate_pa_series(cfg);
  for (int h : {1, 2, 7}) CHECK(last_seen_baseline(s, h) == s.last());
  CHECK_THROWS_AS(last_seen_baseline(s, 0), std::invalid_argument);
}

TEST_CASE("run_experiment on a static series gives an all-zero C6 table") {
  Graph g(5);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  GraphSeries s({g, g, g, g, g, g});
  ExperimentConfig cfg;
  cfg.origins = {4};
  cfg.horizons = {1, 2};
  cfg.schemes = {"C6", "LS"};
  cfg.params.u = 0.5;
  const ExperimentTable table = run_experiment(s, cfg);
  REQUIRE(table.rows.size() == 4);
  for (const MetricRow& row : table.rows) {
    CHECK(row.node_err == 0.0);
    CHECK(row.edge_err == 0.0);
    CHECK(row.dens_err == 0.0);
    CHECK(row.jaccard == 1.0);
  }
  for (const AggregateRow& agg : table.aggregates) {
    CHECK(agg.node_mean == 0.0);
    CHECK(agg.node_sd == 0.0);
  }
}

TEST_CASE("run_experiment is reproducible and rejects bad horizons") {
  PAConfig cfg;
  cfg.s0 = 8;
  cfg.s = 2;
  cfg.nodes_per_step = 2;
  cfg.steps = 10;
  cfg.seed = 21;
  const GraphSeries s = generate_pa_series(cfg);
  ExperimentConfig ec;
  ec.origins = {7, 8};
  ec.horizons = {1, 2};
  ec.schemes = {"C5", "LS"};
  const ExperimentTable a = run_experiment(s, ec);
  const ExperimentTable b = run_experiment(s, ec);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].node_err == b.rows[i].node_err);
    CHECK(a.rows[i].edge_err == b.rows[i].edge_err);
    CHECK(a.rows[i].dens_err == b.rows[i].dens_err);
  }

  ec.origins = {9};
  ec.horizons = {5};
  CHECK_THROWS_AS(run_experiment(s, ec), std::invalid_argument);
}

TEST_CASE("multi-seed harness populates the sd columns") {
  PAConfig base;
  base.s0 = 8;
  base.s = 2;
  base.nodes_per_step = 2;
  base.steps = 9;
  ExperimentConfig ec;
  ec.origins = {7};
  ec.horizons = {1, 2};
  ec.schemes = {"C5"};
  const ExperimentTable table = run_experiment(
      [&](std::uint64_t seed) {
        PAConfig c = base;
        c.seed = seed;
        return generate_pa_series(c);
      },
      {1, 2, 3, 4}, ec);
  CHECK(table.rows.size() == 8);  // 4 seeds x 2 horizons
  for (const AggregateRow& agg : table.aggregates) {
    CHECK(agg.cells == 4);
    CHECK(agg.edge_sd >= 0.0);
  }
}

TEST_CASE("aggregate_rows computes sample statistics") {
  std::vector<MetricRow> rows(3);
  rows[0].scheme = rows[1].scheme = rows[2].scheme = "C5";
  rows[0].h = rows[1].h = rows[2].h = 1;
  rows[0].node_err = 0.0;
  rows[1].node_err = 0.1;
  rows[2].node_err = 0.2;
  const auto aggs = aggregate_rows(rows);
  REQUIRE(aggs.size() == 1);
  CHECK(aggs[0].node_mean == doctest::Approx(0.1));
  CHECK(aggs[0].node_sd == doctest::Approx(0.1));
  CHECK(aggs[0].cells == 3);
}
