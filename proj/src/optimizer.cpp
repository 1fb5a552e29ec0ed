#include "netforecast/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace netforecast {

namespace {

// Variable order shared by both solvers: coefficient descending, column
// (equivalently lexicographic edge) ascending. `variables` is column-sorted,
// so a stable sort on the coefficient alone realizes the tie-break.
std::vector<std::size_t> solve_order(const ProblemInstance& p) {
  std::vector<std::size_t> order(p.variables.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.coeff[a] > p.coeff[b];
  });
  return order;
}

void validate_instance(const ProblemInstance& p) {
  if (p.n < 0) throw std::invalid_argument("negative node count");
  if (p.coeff.size() != p.variables.size()) {
    throw std::invalid_argument("coefficients do not match variables");
  }
  if (static_cast<int>(p.degree_bound.size()) != p.n) {
    throw std::invalid_argument("degree_bound must have one entry per node");
  }
  if ((p.formulation == Formulation::F2) != p.total_bound.has_value()) {
    throw std::invalid_argument(
        "total_bound must be present exactly for formulation F2");
  }
  for (const auto& [i, j] : p.variables) {
    if (j > p.n) throw std::invalid_argument("variable endpoint exceeds n");
  }
}

struct SearchState {
  std::vector<long long> remaining;  // per-node capacity
  long long budget = std::numeric_limits<long long>::max();
};

class BranchAndBound {
 public:
  BranchAndBound(const ProblemInstance& p, std::vector<std::size_t> order)
      : p_(p), order_(std::move(order)) {
    suffix_.resize(order_.size() + 1, 0.0);
    for (std::size_t i = order_.size(); i > 0; --i) {
      suffix_[i - 1] = suffix_[i] + p_.coeff[order_[i - 1]];
    }
    state_.remaining = p_.degree_bound;
    if (p_.total_bound) state_.budget = *p_.total_bound;
  }

  Solution run() {
    best_objective_ = 0.0;
    best_.clear();
    current_.clear();
    dfs(0, 0.0);
    Solution s;
    s.objective = best_objective_;
    s.chosen.reserve(best_.size());
    for (std::size_t idx : best_) s.chosen.push_back(p_.variables[idx]);
    std::sort(s.chosen.begin(), s.chosen.end());
    s.optimality = Optimality::proved;
    return s;
  }

 private:
  void dfs(std::size_t pos, double objective) {
    // Cannot strictly beat the incumbent: prune. Keeping the first incumbent
    // on ties makes the returned solution deterministic.
    if (objective + suffix_[pos] <= best_objective_) return;
    if (pos == order_.size()) {
      if (objective > best_objective_) {
        best_objective_ = objective;
        best_ = current_;
      }
      return;
    }
    const std::size_t idx = order_[pos];
    const auto& [a, b] = p_.variables[idx];
    // Include first; zero-gain additions are skipped so the returned optimum
    // carries no zero-weight edges.
    if (p_.coeff[idx] > 0.0 && state_.budget > 0 &&
        state_.remaining[static_cast<std::size_t>(a) - 1] > 0 &&
        state_.remaining[static_cast<std::size_t>(b) - 1] > 0) {
      --state_.remaining[static_cast<std::size_t>(a) - 1];
      --state_.remaining[static_cast<std::size_t>(b) - 1];
      --state_.budget;
      current_.push_back(idx);
      dfs(pos + 1, objective + p_.coeff[idx]);
      current_.pop_back();
      ++state_.budget;
      ++state_.remaining[static_cast<std::size_t>(a) - 1];
      ++state_.remaining[static_cast<std::size_t>(b) - 1];
    }
    dfs(pos + 1, objective);
  }

  const ProblemInstance& p_;
  std::vector<std::size_t> order_;
  std::vector<double> suffix_;
  SearchState state_;
  double best_objective_ = 0.0;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
};

}  // namespace

Formulation formulation_from_string(const std::string& name) {
  if (name == "F1") return Formulation::F1;
  if (name == "F2") return Formulation::F2;
  throw std::invalid_argument("unknown formulation '" + name +
                              "' (expected F1 or F2)");
}

std::string to_string(Formulation f) {
  return f == Formulation::F1 ? "F1" : "F2";
}

SolverMode solver_mode_from_string(const std::string& name) {
  if (name == "exact") return SolverMode::exact;
  if (name == "heuristic") return SolverMode::heuristic;
  if (name == "auto") return SolverMode::auto_select;
  throw std::invalid_argument("unknown solver '" + name +
                              "' (expected exact, heuristic, or auto)");
}

bool is_feasible(const ProblemInstance& p, const std::vector<Edge>& chosen) {
  std::vector<long long> used(static_cast<std::size_t>(p.n), 0);
  for (const auto& [i, j] : chosen) {
    if (i < 1 || j < 1 || i >= j || j > p.n) return false;
    ++used[static_cast<std::size_t>(i) - 1];
    ++used[static_cast<std::size_t>(j) - 1];
  }
  for (int i = 0; i < p.n; ++i) {
    if (used[static_cast<std::size_t>(i)] >
        p.degree_bound[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  if (p.total_bound &&
      static_cast<long long>(chosen.size()) > *p.total_bound) {
    return false;
  }
  return true;
}

ProblemInstance build_problem(const CandidateGraph& candidate,
                              const CoefficientMap& coeffs,
                              const std::vector<ForecastPoint>& degree_forecasts,
                              double u, Formulation formulation,
                              const std::optional<ForecastPoint>& edge_forecast) {
  ProblemInstance p;
  p.n = candidate.n_total;
  p.formulation = formulation;
  if (static_cast<int>(degree_forecasts.size()) != candidate.n_total) {
    throw std::invalid_argument(
        "missing degree forecast: expected one per candidate node");
  }

  p.variables = candidate.all_edges();
  p.coeff.reserve(p.variables.size());
  for (const Edge& e : p.variables) {
    if (coeffs.weights.count(e) == 0) {
      throw std::invalid_argument(
          "coefficient domain does not cover every candidate edge");
    }
    p.coeff.push_back(coeffs.at(e));
  }

  p.degree_bound.reserve(static_cast<std::size_t>(p.n));
  for (int node = 1; node <= p.n; ++node) {
    const double bound =
        upper_bound(degree_forecasts[static_cast<std::size_t>(node) - 1], u);
    auto b = static_cast<long long>(std::floor(bound));
    b = std::clamp(b, 0LL, static_cast<long long>(p.n) - 1);
    p.degree_bound.push_back(b);
  }

  if (formulation == Formulation::F2) {
    if (!edge_forecast) {
      throw std::invalid_argument("missing edge-count forecast for F2");
    }
    auto tb = static_cast<long long>(std::floor(upper_bound(*edge_forecast, u)));
    p.total_bound = std::max(tb, 0LL);
  }
  return p;
}

Solution solve_exact(const ProblemInstance& p, int exact_limit) {
  validate_instance(p);
  if (static_cast<int>(p.variables.size()) > exact_limit) {
    throw std::invalid_argument(
        "instance has " + std::to_string(p.variables.size()) +
        " variables, above the exact-solver limit of " +
        std::to_string(exact_limit));
  }
  BranchAndBound bb(p, solve_order(p));
  return bb.run();
}

Solution solve_heuristic(const ProblemInstance& p) {
  validate_instance(p);
  const std::vector<std::size_t> order = solve_order(p);

  std::vector<long long> remaining = p.degree_bound;
  long long budget = p.total_bound ? *p.total_bound
                                   : std::numeric_limits<long long>::max();
  std::vector<char> chosen(p.variables.size(), 0);

  auto fits = [&](std::size_t idx) {
    const auto& [a, b] = p.variables[idx];
    return budget > 0 && remaining[static_cast<std::size_t>(a) - 1] > 0 &&
           remaining[static_cast<std::size_t>(b) - 1] > 0;
  };
  auto take = [&](std::size_t idx) {
    const auto& [a, b] = p.variables[idx];
    --remaining[static_cast<std::size_t>(a) - 1];
    --remaining[static_cast<std::size_t>(b) - 1];
    --budget;
    chosen[idx] = 1;
  };
  auto release = [&](std::size_t idx) {
    const auto& [a, b] = p.variables[idx];
    ++remaining[static_cast<std::size_t>(a) - 1];
    ++remaining[static_cast<std::size_t>(b) - 1];
    ++budget;
    chosen[idx] = 0;
  };

  for (std::size_t idx : order) {
    if (p.coeff[idx] > 0.0 && fits(idx)) take(idx);
  }

  // 1-swap local search: drop one chosen edge, greedily re-add up to two.
  const double improve_eps = 1e-9;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t oi = 0; oi < order.size() && !improved; ++oi) {
      const std::size_t out = order[oi];
      if (!chosen[out]) continue;
      release(out);
      double gain = -p.coeff[out];
      std::size_t added[2];
      int added_count = 0;
      for (std::size_t idx : order) {
        if (added_count == 2) break;
        if (chosen[idx] || idx == out) continue;
        if (p.coeff[idx] > 0.0 && fits(idx)) {
          take(idx);
          gain += p.coeff[idx];
          added[added_count++] = idx;
        }
      }
      if (gain > improve_eps) {
        improved = true;
      } else {
        for (int k = added_count - 1; k >= 0; --k) release(added[k]);
        take(out);
      }
    }
  }

  Solution s;
  s.optimality = Optimality::heuristic;
  for (std::size_t idx = 0; idx < p.variables.size(); ++idx) {
    if (chosen[idx]) {
      s.chosen.push_back(p.variables[idx]);
      s.objective += p.coeff[idx];
    }
  }
  std::sort(s.chosen.begin(), s.chosen.end());
  return s;
}

Solution solve(const ProblemInstance& p, SolverMode mode, int exact_limit) {
  switch (mode) {
    case SolverMode::exact:
      return solve_exact(p, exact_limit);
    case SolverMode::heuristic:
      return solve_heuristic(p);
    case SolverMode::auto_select:
      return static_cast<int>(p.variables.size()) <= exact_limit
                 ? solve_exact(p, exact_limit)
                 : solve_heuristic(p);
  }
  throw std::logic_error("unknown solver mode");
}

Graph assemble_forecast_graph(const CandidateGraph& candidate,
                              const Solution& sol) {
  Graph g(candidate.n_total);
  for (const auto& [i, j] : sol.chosen) g.add_edge(i, j);
  return g;
}

PipelineResult run_pipeline(const GraphSeries& series, int h,
                            const ForecastParams& params) {
  if (series.length() < 2) {
    throw std::invalid_argument("forecasting needs a series of length >= 2");
  }
  if (h < 1) throw std::invalid_argument("horizon must be >= 1");
  if (!(params.gamma > 0.0 && params.gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1)");
  }
  if (!(params.u > 0.0 && params.u < 1.0)) {
    throw std::invalid_argument("u must lie in (0, 1)");
  }

  PipelineResult r;
  const int n_t = series.last().n_nodes();

  // Node-count forecast at quantile gamma, rounded, never shrinking.
  const ForecastPoint node_fc =
      forecast(extract_count_series(series, CountKind::nodes), h);
  auto n_hat = static_cast<long long>(std::llround(node_fc.quantile(params.gamma)));
  n_hat = std::max(n_hat, static_cast<long long>(n_t));
  r.n_hat = static_cast<int>(n_hat);
  r.n_new = r.n_hat - n_t;

  // d_avg backs both the new-node degree bound and the default K.
  std::optional<double> d_avg = params.d_avg_override;
  if (!d_avg) {
    try {
      d_avg = average_new_node_degree(series);
    } catch (const std::invalid_argument&) {
      d_avg = std::nullopt;
    }
  }
  if (r.n_new > 0 && !d_avg) {
    throw std::invalid_argument(
        "new nodes are forecast but the series has no arrivals to estimate "
        "d_avg from; pass an explicit d_avg");
  }
  r.d_avg = d_avg.value_or(0.0);

  // Default kappa is every existing node: a small popular set cannot absorb
  // nodes_per_step * s new edges per step once per-node bounds are tight.
  int k = params.K;
  if (k <= 0) k = n_t;
  k = std::min(k, n_t);

  r.candidate = build_candidate(series, r.n_new, k);
  r.coeffs = compute_coefficients(params.scheme, series, r.candidate);

  std::vector<ForecastPoint> degree_fc;
  degree_fc.reserve(static_cast<std::size_t>(r.candidate.n_total));
  for (int node = 1; node <= n_t; ++node) {
    degree_fc.push_back(forecast(extract_degree_series(series, node), h));
  }
  for (int fresh = 0; fresh < r.n_new; ++fresh) {
    degree_fc.emplace_back(std::ceil(*d_avg), 0.0, h);
  }

  std::optional<ForecastPoint> edge_fc;
  if (params.formulation == Formulation::F2) {
    edge_fc = forecast(extract_count_series(series, CountKind::edges), h);
  }

  r.problem = build_problem(r.candidate, r.coeffs, degree_fc, params.u,
                            params.formulation, edge_fc);
  // Level/trend fits lag terminal jumps in staircase degree series, which
  // would force edges that already exist out of the solution; a bound may
  // never undercut the degree observed at T.
  const std::vector<int> current_degrees = series.last().degrees();
  for (int node = 1; node <= n_t; ++node) {
    auto& b = r.problem.degree_bound[static_cast<std::size_t>(node) - 1];
    b = std::max(b, static_cast<long long>(
                        current_degrees[static_cast<std::size_t>(node) - 1]));
  }
  r.solution = solve(r.problem, params.solver, params.exact_limit);
  if (!is_feasible(r.problem, r.solution.chosen)) {
    throw std::logic_error("solver returned an infeasible solution");
  }
  r.graph = assemble_forecast_graph(r.candidate, r.solution);
  return r;
}

Graph forecast_graph(const GraphSeries& series, int h,
                     const ForecastParams& params) {
  return run_pipeline(series, h, params).graph;
}

}  // namespace netforecast
