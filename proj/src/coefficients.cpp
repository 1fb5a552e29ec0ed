#include "netforecast/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace netforecast {

namespace {

// Raw (unnormalized) history statistic per scheme; normalization happens
// against the max over all union edges.
double raw_weight(Scheme scheme, const GraphSeries& series, const Edge& e) {
  const int T = series.length();
  switch (scheme) {
    case Scheme::C1:
      return 1.0;
    case Scheme::C2: {
      for (int t = 1; t <= T; ++t) {
        if (series.at(t).has_edge(e.first, e.second)) return 1.0;
      }
      return 0.0;
    }
    case Scheme::C3: {
      double count = 0;
      for (int t = 1; t <= T; ++t) {
        if (series.at(t).has_edge(e.first, e.second)) count += 1.0;
      }
      return count;
    }
    case Scheme::C4: {
      double sum = 0;
      for (int t = 1; t <= T; ++t) {
        if (series.at(t).has_edge(e.first, e.second)) {
          sum += static_cast<double>(t);
        }
      }
      return sum;
    }
    case Scheme::C5: {
      double sum = 0;
      for (int t = 1; t <= T; ++t) {
        if (series.at(t).has_edge(e.first, e.second)) {
          sum += 1.0 / static_cast<double>(T - t + 1);
        }
      }
      return sum;
    }
    case Scheme::C6:
      return series.last().has_edge(e.first, e.second) ? 1.0 : 0.0;
  }
  throw std::logic_error("unknown scheme");
}

bool self_normalizing(Scheme scheme) {
  return scheme == Scheme::C3 || scheme == Scheme::C4 || scheme == Scheme::C5;
}

double max_raw_over_union(Scheme scheme, const GraphSeries& series) {
  const Graph u = union_graphs(series);
  double best = 0;
  for (const Edge& e : u.edges()) {
    best = std::max(best, raw_weight(scheme, series, e));
  }
  return best;
}

}  // namespace

Scheme scheme_from_string(const std::string& name) {
  if (name == "C1") return Scheme::C1;
  if (name == "C2") return Scheme::C2;
  if (name == "C3") return Scheme::C3;
  if (name == "C4") return Scheme::C4;
  if (name == "C5") return Scheme::C5;
  if (name == "C6") return Scheme::C6;
  throw std::invalid_argument("unknown coefficient scheme '" + name +
                              "' (expected C1..C6)");
}

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::C1: return "C1";
    case Scheme::C2: return "C2";
    case Scheme::C3: return "C3";
    case Scheme::C4: return "C4";
    case Scheme::C5: return "C5";
    case Scheme::C6: return "C6";
  }
  throw std::logic_error("unknown scheme");
}

double CoefficientMap::at(const Edge& e) const {
  auto it = weights.find(e);
  if (it == weights.end()) {
    throw std::out_of_range("edge is not in the coefficient domain");
  }
  return it->second;
}

double existing_edge_weight(Scheme scheme, const GraphSeries& series, Edge e) {
  if (e.second > series.last().n_nodes()) {
    throw std::invalid_argument("existing-edge weight on a new-node edge");
  }
  const double raw = raw_weight(scheme, series, e);
  if (!self_normalizing(scheme)) return raw;
  const double norm = max_raw_over_union(scheme, series);
  if (norm == 0.0) return 0.0;
  return raw / norm;
}

double empirical_quantile(const std::vector<double>& sorted, double level) {
  const double q = std::clamp(level, 0.0, 1.0);
  if (sorted.empty()) return q;
  if (sorted.size() == 1) return sorted.front();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[lo + 1] - sorted[lo]) * frac;
}

double new_edge_weight(const std::vector<double>& existing_weights,
                       const std::vector<int>& union_degrees,
                       const std::vector<int>& kappa, int member) {
  if (std::find(kappa.begin(), kappa.end(), member) == kappa.end()) {
    throw std::invalid_argument("node " + std::to_string(member) +
                                " is not a kappa member");
  }
  long long total = 0;
  for (int k : kappa) total += union_degrees[static_cast<std::size_t>(k) - 1];
  if (total <= 0) {
    throw std::invalid_argument(
        "total kappa degree is zero; new-edge quantile level is undefined");
  }
  const double level =
      static_cast<double>(union_degrees[static_cast<std::size_t>(member) - 1]) /
      static_cast<double>(total);
  std::vector<double> sorted = existing_weights;
  std::sort(sorted.begin(), sorted.end());
  return empirical_quantile(sorted, level);
}

CoefficientMap compute_coefficients(Scheme scheme, const GraphSeries& series,
                                    const CandidateGraph& candidate) {
  CoefficientMap map;
  map.scheme = scheme;

  // Batched version of existing_edge_weight: one pass for the raw statistics,
  // one for the normalizer.
  std::vector<double> existing;
  existing.reserve(candidate.base.edges().size());
  double norm = 1.0;
  if (self_normalizing(scheme)) {
    norm = 0.0;
    for (const Edge& e : candidate.base.edges()) {
      norm = std::max(norm, raw_weight(scheme, series, e));
    }
  }
  for (const Edge& e : candidate.base.edges()) {
    double w = raw_weight(scheme, series, e);
    if (self_normalizing(scheme)) w = (norm == 0.0) ? 0.0 : w / norm;
    map.weights.emplace(e, w);
    existing.push_back(w);
  }

  if (!candidate.new_edges.empty()) {
    // The quantile reference is the positive existing weights: schemes that
    // zero out stale union edges (C6) would otherwise push every new-edge
    // weight to 0 and starve new nodes of edges entirely.
    std::erase_if(existing, [](double w) { return w <= 0.0; });
    std::sort(existing.begin(), existing.end());
    // One quantile per kappa endpoint; every new node reuses it.
    std::map<int, double> per_member;
    for (const Edge& e : candidate.new_edges) {
      const int member = e.first;  // kappa member <= n_T < new node id
      double w;
      if (scheme == Scheme::C1 || scheme == Scheme::C2) {
        w = 1.0;
      } else {
        auto it = per_member.find(member);
        if (it == per_member.end()) {
          w = new_edge_weight(existing, candidate.union_degrees,
                              candidate.kappa, member);
          per_member.emplace(member, w);
        } else {
          w = it->second;
        }
      }
      map.weights.emplace(e, w);
    }
  }
  return map;
}

}  // namespace netforecast
