#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace netforecast {

// Undirected edge stored as an ordered pair (u, v) with u < v. Node ids are
// 1-based everywhere in this library.
using Edge = std::pair<int, int>;

// Normalizes endpoint order; rejects self-loops and non-positive ids.
Edge make_edge(int i, int j);

// Simple undirected graph: a node count plus a sorted set of edges.
// No self-loops, no duplicate edges, every endpoint <= n_nodes.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n_nodes);
  Graph(int n_nodes, std::set<Edge> edges);

  int n_nodes() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::set<Edge>& edges() const { return edges_; }

  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);
  void add_nodes(int count);

  int degree(int node) const;
  std::vector<int> degrees() const;  // index node-1

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::set<Edge> edges_;
};

// 2m / (n(n-1)); requires n >= 2.
double density(const Graph& g);

// Time-ordered snapshots with positional node identity (node i at time t is
// node i at time t+1) and non-decreasing node counts.
class GraphSeries {
 public:
  GraphSeries() = default;
  explicit GraphSeries(std::vector<Graph> graphs);

  void push_back(Graph g);
  int length() const { return static_cast<int>(graphs_.size()); }
  bool empty() const { return graphs_.empty(); }
  const Graph& at(int t) const;  // t is 1-based
  const Graph& last() const;
  const std::vector<Graph>& graphs() const { return graphs_; }

  // First time step at which `node` exists (smallest t with n_t >= node).
  int first_seen(int node) const;

  // Copy of the first t snapshots.
  GraphSeries prefix(int t) const;

 private:
  std::vector<Graph> graphs_;
};

// Edge-set union of all snapshots on n_T nodes (multi-edges collapse).
Graph union_graphs(const GraphSeries& series);

// The min(k, n) nodes of largest degree, ties broken by ascending node id.
// Returned in ascending node id order.
std::vector<int> top_k_nodes(const Graph& g, int k);

// Union graph plus forecast-driven new nodes, each wired to every member of
// the popular set kappa. Base never touches new nodes; union_degrees are
// taken on the union graph before augmentation.
struct CandidateGraph {
  Graph base;                      // union graph on n_T nodes
  int n_total = 0;                 // n_T + number of new nodes
  std::vector<int> kappa;          // ascending node ids
  std::vector<int> union_degrees;  // size n_T, index node-1
  std::set<Edge> new_edges;        // (kappa member, new node) pairs

  int n_existing() const { return base.n_nodes(); }
  int n_new() const { return n_total - base.n_nodes(); }

  // Base edges plus new edges, sorted; this is the variable domain of the
  // optimization (all other incidence columns are zero-inflation).
  std::vector<Edge> all_edges() const;
};

CandidateGraph build_candidate(const GraphSeries& series, int n_new, int k);

// Column indexing of the zero-inflated incidence matrix: columns enumerate
// the upper triangle row by row, k(i,j) = (i-1)(2n-i)/2 + (j-i), with k in
// 1..n(n-1)/2. Row r of the realized matrix has a 1 in column k(i,j) iff
// r is i or j and (i,j) is a candidate edge.
std::int64_t column_count(int n);
std::int64_t edge_column_index(int i, int j, int n);
Edge column_to_edge(std::int64_t k, int n);

struct IncidenceColumnMap {
  int n = 0;

  std::int64_t columns() const { return column_count(n); }
  std::int64_t column(int i, int j) const { return edge_column_index(i, j, n); }
  Edge edge(std::int64_t k) const { return column_to_edge(k, n); }
};

}  // namespace netforecast
