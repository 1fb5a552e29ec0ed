#include "netforecast/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace netforecast {

double node_error(const Graph& pred, const Graph& actual) {
  if (actual.n_nodes() < 1) {
    throw std::invalid_argument("actual graph must have at least one node");
  }
  return std::abs(pred.n_nodes() - actual.n_nodes()) /
         static_cast<double>(actual.n_nodes());
}

double edge_error(const Graph& pred, const Graph& actual) {
  if (actual.n_edges() < 1) {
    throw std::invalid_argument("actual graph must have at least one edge");
  }
  return std::abs(pred.n_edges() - actual.n_edges()) /
         static_cast<double>(actual.n_edges());
}

double density_error(const Graph& pred, const Graph& actual) {
  return std::abs(density(pred) - density(actual));
}

double edge_jaccard(const Graph& pred, const Graph& actual) {
  std::size_t inter = 0;
  for (const Edge& e : pred.edges()) {
    if (actual.edges().count(e)) ++inter;
  }
  const std::size_t uni =
      pred.edges().size() + actual.edges().size() - inter;
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

Graph last_seen_baseline(const GraphSeries& series, int h) {
  if (h < 1) throw std::invalid_argument("horizon must be >= 1");
  return series.last();
}

namespace {

MetricRow score(const std::string& scheme, int T, int h, std::uint64_t seed,
                const Graph& pred, const Graph& actual) {
  MetricRow row;
  row.scheme = scheme;
  row.T = T;
  row.h = h;
  row.seed = seed;
  row.node_err = node_error(pred, actual);
  row.edge_err = edge_error(pred, actual);
  row.dens_err = density_error(pred, actual);
  row.jaccard = edge_jaccard(pred, actual);
  return row;
}

void run_cells(const GraphSeries& series, const ExperimentConfig& cfg,
               std::uint64_t seed_label, std::vector<MetricRow>& out) {
  if (cfg.origins.empty() || cfg.horizons.empty() || cfg.schemes.empty()) {
    throw std::invalid_argument("origins, horizons, and schemes must be set");
  }
  const int max_T = *std::max_element(cfg.origins.begin(), cfg.origins.end());
  const int max_h =
      *std::max_element(cfg.horizons.begin(), cfg.horizons.end());
  if (max_T + max_h > series.length()) {
    throw std::invalid_argument(
        "origins plus horizons reach beyond the series: need length >= " +
        std::to_string(max_T + max_h) + ", have " +
        std::to_string(series.length()));
  }

  for (int repeat = 0; repeat < std::max(1, cfg.repeats); ++repeat) {
    const std::uint64_t run_id =
        cfg.repeats > 1 ? seed_label * 1000 + static_cast<std::uint64_t>(repeat)
                        : seed_label;
    for (int T : cfg.origins) {
      const GraphSeries history = series.prefix(T);
      for (const std::string& scheme : cfg.schemes) {
        if (scheme == "LS") {
          for (int h : cfg.horizons) {
            out.push_back(score("LS", T, h, run_id,
                                last_seen_baseline(history, h),
                                series.at(T + h)));
          }
        } else {
          ForecastParams params = cfg.params;
          params.scheme = scheme_from_string(scheme);
          for (int h : cfg.horizons) {
            out.push_back(score(scheme, T, h, run_id,
                                forecast_graph(history, h, params),
                                series.at(T + h)));
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<AggregateRow> aggregate_rows(const std::vector<MetricRow>& rows) {
  struct Acc {
    std::vector<double> node, edge, dens, jac;
  };
  std::map<std::pair<std::string, int>, Acc> groups;
  for (const MetricRow& r : rows) {
    Acc& a = groups[{r.scheme, r.h}];
    a.node.push_back(r.node_err);
    a.edge.push_back(r.edge_err);
    a.dens.push_back(r.dens_err);
    a.jac.push_back(r.jaccard);
  }
  auto mean = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  auto sample_sd = [&](const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
  };
  std::vector<AggregateRow> out;
  for (const auto& [key, acc] : groups) {
    AggregateRow row;
    row.scheme = key.first;
    row.h = key.second;
    row.cells = static_cast<int>(acc.node.size());
    row.node_mean = mean(acc.node);
    row.node_sd = sample_sd(acc.node);
    row.edge_mean = mean(acc.edge);
    row.edge_sd = sample_sd(acc.edge);
    row.dens_mean = mean(acc.dens);
    row.dens_sd = sample_sd(acc.dens);
    row.jaccard_mean = mean(acc.jac);
    row.jaccard_sd = sample_sd(acc.jac);
    out.push_back(row);
  }
  return out;
}

ExperimentTable run_experiment(const GraphSeries& series,
                               const ExperimentConfig& cfg,
                               std::uint64_t seed_label) {
  ExperimentTable table;
  run_cells(series, cfg, seed_label, table.rows);
  table.aggregates = aggregate_rows(table.rows);
  return table;
}

ExperimentTable run_experiment(
    const std::function<GraphSeries(std::uint64_t)>& make_series,
    const std::vector<std::uint64_t>& seeds, const ExperimentConfig& cfg) {
  if (seeds.empty()) throw std::invalid_argument("no seeds supplied");
  ExperimentTable table;
  for (std::uint64_t seed : seeds) {
    const GraphSeries series = make_series(seed);
    run_cells(series, cfg, seed, table.rows);
  }
  table.aggregates = aggregate_rows(table.rows);
  return table;
}

}  // namespace netforecast
