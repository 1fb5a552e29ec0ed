#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netforecast/coefficients.hpp"
#include "netforecast/forecast.hpp"
#include "netforecast/graph.hpp"

namespace netforecast {

// F1: per-node degree upper bounds only. F2: F1 plus a bound on the total
// number of selected edges.
enum class Formulation { F1, F2 };

Formulation formulation_from_string(const std::string& name);
std::string to_string(Formulation f);

// Binary edge-selection problem: maximize sum of coeff over chosen edges
// subject to degree(i) <= degree_bound[i-1] for every node and, under F2,
// |chosen| <= total_bound.
struct ProblemInstance {
  int n = 0;
  std::vector<Edge> variables;   // sorted by incidence column index
  std::vector<double> coeff;     // parallel to variables
  std::vector<long long> degree_bound;  // size n, index node-1
  std::optional<long long> total_bound;
  Formulation formulation = Formulation::F1;
};

enum class Optimality { proved, heuristic };

struct Solution {
  std::vector<Edge> chosen;  // sorted
  double objective = 0.0;
  Optimality optimality = Optimality::heuristic;
};

// Feasibility check written independently of both solvers.
bool is_feasible(const ProblemInstance& p, const std::vector<Edge>& chosen);

// Bounds are u-level quantiles of the forecasts, floored (the left-hand
// sides are integral) and clamped into [0, n-1]. degree_forecasts must cover
// every node of the candidate, new nodes included. Under F2 the total bound
// is floor(upper_bound(edge_forecast, u)); the double-counting factor of the
// summed-degree form cancels because variables are edges.
ProblemInstance build_problem(const CandidateGraph& candidate,
                              const CoefficientMap& coeffs,
                              const std::vector<ForecastPoint>& degree_forecasts,
                              double u, Formulation formulation,
                              const std::optional<ForecastPoint>& edge_forecast);

// Depth-first include-first branch and bound over variables ordered by
// (coefficient descending, column ascending); returns the first incumbent
// attaining the proved optimum. Zero-coefficient variables are never
// selected. Throws when the instance exceeds exact_limit variables.
Solution solve_exact(const ProblemInstance& p, int exact_limit = 30);

// Greedy pass in the same order followed by 1-swap local search (remove one
// chosen edge, greedily add up to two others) until no improving move.
Solution solve_heuristic(const ProblemInstance& p);

enum class SolverMode { exact, heuristic, auto_select };

SolverMode solver_mode_from_string(const std::string& name);

Solution solve(const ProblemInstance& p, SolverMode mode, int exact_limit = 30);

// Graph on candidate.n_total nodes containing exactly the chosen edges.
Graph assemble_forecast_graph(const CandidateGraph& candidate,
                              const Solution& sol);

struct ForecastParams {
  Scheme scheme = Scheme::C5;
  Formulation formulation = Formulation::F2;
  double gamma = 0.5;  // node-count quantile
  double u = 0.55;     // degree/edge bound quantile
  int K = 0;           // popular-set size; <= 0 selects all existing nodes
  SolverMode solver = SolverMode::auto_select;
  int exact_limit = 30;
  std::optional<double> d_avg_override;
};

// Every intermediate of one forecast, kept for diagnostics and the bounds
// reporting path.
struct PipelineResult {
  int n_hat = 0;
  int n_new = 0;
  double d_avg = 0.0;  // 0 when unused
  CandidateGraph candidate;
  CoefficientMap coeffs;
  ProblemInstance problem;
  Solution solution;
  Graph graph;
};

// Full pipeline: forecast counts and degrees, build the candidate and the
// problem, solve, assemble.
PipelineResult run_pipeline(const GraphSeries& series, int h,
                            const ForecastParams& params);

Graph forecast_graph(const GraphSeries& series, int h,
                     const ForecastParams& params);

}  // namespace netforecast
