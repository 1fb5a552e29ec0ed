#include "netforecast/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netforecast {

Edge make_edge(int i, int j) {
  if (i == j) {
    throw std::invalid_argument("edge (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") is a self-loop");
  }
  if (i < 1 || j < 1) {
    throw std::invalid_argument("node ids are 1-based; got (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ")");
  }
  return i < j ? Edge{i, j} : Edge{j, i};
}

Graph::Graph(int n_nodes) : n_(n_nodes) {
  if (n_nodes < 0) throw std::invalid_argument("negative node count");
}

Graph::Graph(int n_nodes, std::set<Edge> edges) : Graph(n_nodes) {
  for (const auto& [i, j] : edges) add_edge(i, j);
}

bool Graph::has_edge(int i, int j) const {
  if (i == j) return false;
  return edges_.count(make_edge(i, j)) > 0;
}

void Graph::add_edge(int i, int j) {
  Edge e = make_edge(i, j);
  if (e.second > n_) {
    throw std::invalid_argument("edge endpoint " + std::to_string(e.second) +
                                " exceeds node count " + std::to_string(n_));
  }
  edges_.insert(e);
}

void Graph::add_nodes(int count) {
  if (count < 0) throw std::invalid_argument("negative node count");
  n_ += count;
}

int Graph::degree(int node) const {
  if (node < 1 || node > n_) {
    throw std::out_of_range("node " + std::to_string(node) +
                            " not in graph of size " + std::to_string(n_));
  }
  int d = 0;
  for (const auto& [i, j] : edges_) {
    if (i == node || j == node) ++d;
  }
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_), 0);
  for (const auto& [i, j] : edges_) {
    ++d[static_cast<std::size_t>(i) - 1];
    ++d[static_cast<std::size_t>(j) - 1];
  }
  return d;
}

double density(const Graph& g) {
  const auto n = static_cast<double>(g.n_nodes());
  if (g.n_nodes() < 2) {
    throw std::invalid_argument("density requires at least 2 nodes");
  }
  return 2.0 * static_cast<double>(g.n_edges()) / (n * (n - 1.0));
}

GraphSeries::GraphSeries(std::vector<Graph> graphs) {
  for (auto& g : graphs) push_back(std::move(g));
}

void GraphSeries::push_back(Graph g) {
  if (!graphs_.empty() && g.n_nodes() < graphs_.back().n_nodes()) {
    throw std::invalid_argument(
        "node counts must be non-decreasing over time (growing graphs)");
  }
  graphs_.push_back(std::move(g));
}

const Graph& GraphSeries::at(int t) const {
  if (t < 1 || t > length()) {
    throw std::out_of_range("time index " + std::to_string(t) +
                            " outside series of length " +
                            std::to_string(length()));
  }
  return graphs_[static_cast<std::size_t>(t) - 1];
}

const Graph& GraphSeries::last() const {
  if (graphs_.empty()) throw std::out_of_range("empty series");
  return graphs_.back();
}

int GraphSeries::first_seen(int node) const {
  if (graphs_.empty() || node < 1 || node > graphs_.back().n_nodes()) {
    throw std::out_of_range("node " + std::to_string(node) +
                            " never appears in the series");
  }
  for (int t = 1; t <= length(); ++t) {
    if (at(t).n_nodes() >= node) return t;
  }
  return length();  // unreachable given the check above
}

GraphSeries GraphSeries::prefix(int t) const {
  if (t < 1 || t > length()) {
    throw std::out_of_range("prefix length " + std::to_string(t) +
                            " outside series of length " +
                            std::to_string(length()));
  }
  return GraphSeries(std::vector<Graph>(graphs_.begin(), graphs_.begin() + t));
}

Graph union_graphs(const GraphSeries& series) {
  if (series.empty()) throw std::invalid_argument("empty series");
  Graph u(series.last().n_nodes());
  for (int t = 1; t <= series.length(); ++t) {
    for (const auto& [i, j] : series.at(t).edges()) u.add_edge(i, j);
  }
  return u;
}

std::vector<int> top_k_nodes(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const std::vector<int> deg = g.degrees();
  std::vector<int> nodes(static_cast<std::size_t>(g.n_nodes()));
  for (int i = 0; i < g.n_nodes(); ++i) nodes[static_cast<std::size_t>(i)] = i + 1;
  std::stable_sort(nodes.begin(), nodes.end(), [&](int a, int b) {
    int da = deg[static_cast<std::size_t>(a) - 1];
    int db = deg[static_cast<std::size_t>(b) - 1];
    if (da != db) return da > db;
    return a < b;
  });
  nodes.resize(static_cast<std::size_t>(std::min(k, g.n_nodes())));
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

std::vector<Edge> CandidateGraph::all_edges() const {
  std::vector<Edge> out;
  out.reserve(base.edges().size() + new_edges.size());
  std::merge(base.edges().begin(), base.edges().end(), new_edges.begin(),
             new_edges.end(), std::back_inserter(out));
  return out;
}

CandidateGraph build_candidate(const GraphSeries& series, int n_new, int k) {
  if (n_new < 0) throw std::invalid_argument("n_new must be non-negative");
  CandidateGraph c;
  c.base = union_graphs(series);
  c.union_degrees = c.base.degrees();
  c.kappa = top_k_nodes(c.base, k);
  c.n_total = c.base.n_nodes() + n_new;
  for (int idx = 1; idx <= n_new; ++idx) {
    const int fresh = c.base.n_nodes() + idx;
    for (int member : c.kappa) c.new_edges.insert(make_edge(member, fresh));
  }
  return c;
}

std::int64_t column_count(int n) {
  if (n < 0) throw std::invalid_argument("negative node count");
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

std::int64_t edge_column_index(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) {
    throw std::invalid_argument("edge index requires 1 <= i < j <= n; got i=" +
                                std::to_string(i) + " j=" + std::to_string(j) +
                                " n=" + std::to_string(n));
  }
  const auto bi = static_cast<std::int64_t>(i);
  const auto bn = static_cast<std::int64_t>(n);
  return (bi - 1) * (2 * bn - bi) / 2 + (static_cast<std::int64_t>(j) - bi);
}

Edge column_to_edge(std::int64_t k, int n) {
  if (k < 1 || k > column_count(n)) {
    throw std::invalid_argument("column " + std::to_string(k) +
                                " outside 1..n(n-1)/2 for n=" +
                                std::to_string(n));
  }
  // Row i owns columns (offset(i), offset(i) + n - i] where
  // offset(i) = (i-1)(2n-i)/2.
  int lo = 1, hi = n - 1;
  auto offset = [n](std::int64_t i) { return (i - 1) * (2 * n - i) / 2; };
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    if (offset(mid) < k) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const int i = lo;
  const int j = i + static_cast<int>(k - offset(i));
  return {i, j};
}

}  // namespace netforecast
