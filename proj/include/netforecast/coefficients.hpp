#pragma once

#include <map>
#include <string>
#include <vector>

#include "netforecast/graph.hpp"

namespace netforecast {

// Objective weight schemes for candidate edges.
//   C1 uniform, C2 binary history, C3 presence proportion,
//   C4 linear time decay, C5 harmonic time decay, C6 last seen graph.
enum class Scheme { C1, C2, C3, C4, C5, C6 };

Scheme scheme_from_string(const std::string& name);
std::string to_string(Scheme scheme);

// Weights for every candidate edge, each in [0, 1].
struct CoefficientMap {
  Scheme scheme = Scheme::C5;
  std::map<Edge, double> weights;

  double at(const Edge& e) const;
};

// Weight of an edge between existing nodes under `scheme`. C3/C4/C5
// self-normalize by the maximum over the union-graph (candidate existing)
// edges; an edgeless union yields 0.
double existing_edge_weight(Scheme scheme, const GraphSeries& series, Edge e);

// Empirical quantile (order statistics, linear interpolation) of sorted
// values at `level` clamped to [0, 1]; an empty sample returns the level.
double empirical_quantile(const std::vector<double>& sorted, double level);

// Weight of a new-node edge attached to kappa member `member`: the quantile
// of the existing-edge weight distribution at level
// d_{member,U} / sum_{k in kappa} d_{k,U}.
double new_edge_weight(const std::vector<double>& existing_weights,
                       const std::vector<int>& union_degrees,
                       const std::vector<int>& kappa, int member);

// Full coefficient map over candidate.all_edges(). Existing edges use
// existing_edge_weight; new edges use new_edge_weight keyed by the kappa
// endpoint, except C1/C2 which assign 1 to them. The quantile reference is
// the multiset of positive existing-edge weights (an all-zero multiset would
// pin every new edge to weight 0 and the level fallback applies instead).
CoefficientMap compute_coefficients(Scheme scheme, const GraphSeries& series,
                                    const CandidateGraph& candidate);

}  // namespace netforecast
