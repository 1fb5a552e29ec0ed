#include "netforecast/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace netforecast {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Rational approximation due to Peter Acklam, polished with one Halley step
// against erfc; good to full double precision over (0, 1).
double acklam_inverse_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    double q = p - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  double u = e * std::sqrt(2.0 * kPi) * std::exp(x * x / 2.0);
  return x - u / (1.0 + x * u / 2.0);
}

struct LeastSquaresFit {
  double intercept = 0;
  double slope = 0;
  double rss = 0;
};

// OLS on t = 1..n.
LeastSquaresFit fit_linear(const std::vector<double>& y) {
  const auto n = static_cast<double>(y.size());
  double tbar = (n + 1.0) / 2.0;
  double ybar = 0;
  for (double v : y) ybar += v;
  ybar /= n;
  double stt = 0, sty = 0;
  for (std::size_t idx = 0; idx < y.size(); ++idx) {
    double dt = static_cast<double>(idx + 1) - tbar;
    stt += dt * dt;
    sty += dt * (y[idx] - ybar);
  }
  LeastSquaresFit f;
  f.slope = sty / stt;
  f.intercept = ybar - f.slope * tbar;
  for (std::size_t idx = 0; idx < y.size(); ++idx) {
    double r = y[idx] - (f.intercept + f.slope * static_cast<double>(idx + 1));
    f.rss += r * r;
  }
  return f;
}

// AICc with k counting the error variance as an estimated parameter
// (Hurvich-Tsai correction); +inf when the correction is undefined.
double aicc(int n, double rss, int k) {
  if (n - k - 1 <= 0) return std::numeric_limits<double>::infinity();
  double sigma2 = rss / static_cast<double>(n);
  return static_cast<double>(n) * std::log(sigma2) + 2.0 * k +
         2.0 * static_cast<double>(k) * (k + 1) / static_cast<double>(n - k - 1);
}

}  // namespace

ForecastPoint::ForecastPoint(double point, double sd, int horizon)
    : point_(point), sd_(sd), horizon_(horizon) {
  if (point < 0 || !std::isfinite(point)) {
    throw std::invalid_argument("forecast point must be finite and >= 0");
  }
  if (sd < 0 || !std::isfinite(sd)) {
    throw std::invalid_argument("forecast sd must be finite and >= 0");
  }
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
}

double ForecastPoint::quantile(double level) const {
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("quantile level must lie in (0, 1)");
  }
  if (sd_ == 0.0) return point_;
  return point_ + sd_ * normal_quantile(level);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("quantile level must lie in (0, 1)");
  }
  if (p == 0.5) return 0.0;
  return acklam_inverse_cdf(p);
}

double upper_bound(const ForecastPoint& f, double u) {
  return std::max(0.0, f.quantile(u));
}

UnivariateSeries extract_degree_series(const GraphSeries& series, int node) {
  const int t0 = series.first_seen(node);
  UnivariateSeries s;
  s.start_time = t0;
  s.values.reserve(static_cast<std::size_t>(series.length() - t0 + 1));
  for (int t = t0; t <= series.length(); ++t) {
    s.values.push_back(static_cast<double>(series.at(t).degree(node)));
  }
  return s;
}

UnivariateSeries extract_count_series(const GraphSeries& series,
                                      CountKind kind) {
  if (series.empty()) throw std::invalid_argument("empty series");
  UnivariateSeries s;
  s.start_time = 1;
  s.values.reserve(static_cast<std::size_t>(series.length()));
  for (int t = 1; t <= series.length(); ++t) {
    const Graph& g = series.at(t);
    s.values.push_back(static_cast<double>(
        kind == CountKind::nodes ? g.n_nodes() : g.n_edges()));
  }
  return s;
}

ForecastPoint forecast(const UnivariateSeries& series, int h) {
  if (h < 1) throw std::invalid_argument("horizon must be >= 1");
  const int n = series.length();
  if (n == 0) throw std::invalid_argument("cannot forecast an empty series");
  for (double v : series.values) {
    if (v < 0 || !std::isfinite(v)) {
      throw std::invalid_argument("series values must be finite and >= 0");
    }
  }
  if (n < 3) {
    // Regression is underdetermined; carry the last value forward.
    return ForecastPoint(std::max(0.0, series.values.back()), 0.0, h);
  }

  double mean = 0, sumsq = 0;
  for (double v : series.values) {
    mean += v;
    sumsq += v * v;
  }
  mean /= static_cast<double>(n);
  double rss_const = 0;
  for (double v : series.values) rss_const += (v - mean) * (v - mean);
  const LeastSquaresFit lin = fit_linear(series.values);

  // Perfect fits (up to fp roundoff) short-circuit model selection and pin
  // the standard error to zero, so exact lines reproduce at every horizon.
  const double eps = 1e-18 * (sumsq + 1.0) * static_cast<double>(n);
  bool use_linear;
  bool perfect;
  if (rss_const <= eps) {
    use_linear = false;
    perfect = true;
  } else if (lin.rss <= eps) {
    use_linear = true;
    perfect = true;
  } else {
    use_linear = aicc(n, lin.rss, 3) < aicc(n, rss_const, 2);
    perfect = false;
  }

  double point = use_linear
                     ? lin.intercept + lin.slope * static_cast<double>(n + h)
                     : mean;
  double resid_sd = 0.0;
  if (!perfect) {
    resid_sd = use_linear ? std::sqrt(lin.rss / static_cast<double>(n - 2))
                          : std::sqrt(rss_const / static_cast<double>(n - 1));
  }
  return ForecastPoint(std::max(0.0, point),
                       resid_sd * std::sqrt(static_cast<double>(h)), h);
}

double average_new_node_degree(const GraphSeries& series) {
  double total = 0;
  long long count = 0;
  for (int t = 2; t <= series.length(); ++t) {
    const Graph& g = series.at(t);
    for (int node = series.at(t - 1).n_nodes() + 1; node <= g.n_nodes();
         ++node) {
      total += static_cast<double>(g.degree(node));
      ++count;
    }
  }
  if (count == 0) {
    throw std::invalid_argument(
        "series has no new-node arrivals; d_avg is undefined and must be "
        "supplied by the caller");
  }
  return total / static_cast<double>(count);
}

}  // namespace netforecast
