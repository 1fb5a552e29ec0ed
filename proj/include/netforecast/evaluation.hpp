#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "netforecast/graph.hpp"
#include "netforecast/optimizer.hpp"

namespace netforecast {

// |n_hat - n| / n
double node_error(const Graph& pred, const Graph& actual);
// |m_hat - m| / m
double edge_error(const Graph& pred, const Graph& actual);
// |dens(pred) - dens(actual)| (absolute difference, both densities in [0,1])
double density_error(const Graph& pred, const Graph& actual);
// Supplementary diagnostic, not one of the three headline metrics:
// |E_pred intersect E_actual| / |E_pred union E_actual|; 1 when both empty.
double edge_jaccard(const Graph& pred, const Graph& actual);

// The comparison baseline: G_T for every horizon.
Graph last_seen_baseline(const GraphSeries& series, int h);

// One rolling-origin evaluation cell.
struct MetricRow {
  std::string scheme;  // "C1".."C6" or "LS"
  int T = 0;
  int h = 0;
  std::uint64_t seed = 0;
  double node_err = 0;
  double edge_err = 0;
  double dens_err = 0;
  double jaccard = 0;
};

// Mean and sample (n-1) standard deviation per (scheme, h) across all
// origins and seeds.
struct AggregateRow {
  std::string scheme;
  int h = 0;
  int cells = 0;
  double node_mean = 0, node_sd = 0;
  double edge_mean = 0, edge_sd = 0;
  double dens_mean = 0, dens_sd = 0;
  double jaccard_mean = 0, jaccard_sd = 0;
};

struct ExperimentConfig {
  std::vector<int> origins;
  std::vector<int> horizons;
  std::vector<std::string> schemes;  // coefficient schemes and/or "LS"
  ForecastParams params;             // scheme field overridden per entry
  int repeats = 1;  // re-runs of the same deterministic series per seed label
};

struct ExperimentTable {
  std::vector<MetricRow> rows;
  std::vector<AggregateRow> aggregates;
};

// Rolling origin over one series: truncate to 1..T, forecast h ahead, score
// against G_{T+h}.
ExperimentTable run_experiment(const GraphSeries& series,
                               const ExperimentConfig& cfg,
                               std::uint64_t seed_label = 0);

// Multi-seed variant: one regenerated series per seed.
ExperimentTable run_experiment(
    const std::function<GraphSeries(std::uint64_t)>& make_series,
    const std::vector<std::uint64_t>& seeds, const ExperimentConfig& cfg);

std::vector<AggregateRow> aggregate_rows(const std::vector<MetricRow>& rows);

}  // namespace netforecast
