#pragma once

#include <vector>

#include "netforecast/graph.hpp"

namespace netforecast {

// A non-negative univariate series observed from `start_time` onwards.
struct UnivariateSeries {
  int start_time = 1;
  std::vector<double> values;

  int length() const { return static_cast<int>(values.size()); }
};

// Point forecast `h` steps ahead with a Gaussian quantile function around it.
// A zero standard error collapses every quantile onto the point.
class ForecastPoint {
 public:
  ForecastPoint(double point, double sd, int horizon);

  double point() const { return point_; }
  double sd() const { return sd_; }
  int horizon() const { return horizon_; }

  // level in (0, 1); non-decreasing in level; quantile(0.5) == point.
  double quantile(double level) const;

 private:
  double point_ = 0;
  double sd_ = 0;
  int horizon_ = 1;
};

// Standard normal inverse CDF.
double normal_quantile(double p);

// max(0, quantile(u)); the degree/edge upper bound function.
double upper_bound(const ForecastPoint& f, double u);

// Degree history of one node from its first appearance to T.
UnivariateSeries extract_degree_series(const GraphSeries& series, int node);

enum class CountKind { nodes, edges };

// n_t or m_t for t = 1..T.
UnivariateSeries extract_count_series(const GraphSeries& series, CountKind kind);

// Default forecaster: least-squares constant-mean and linear-trend fits,
// selected by AICc; h-step standard error is the residual sd scaled by
// sqrt(h). Series shorter than 3 fall back to the naive last-value forecast
// with zero standard error. Points are clamped to be non-negative.
ForecastPoint forecast(const UnivariateSeries& series, int h);

// Pooled mean first-appearance degree over all nodes arriving at t >= 2.
// Throws when the series contains no new-node arrivals.
double average_new_node_degree(const GraphSeries& series);

}  // namespace netforecast
