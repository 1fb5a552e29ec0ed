#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>
#include <vector>

#include "netforecast/graph.hpp"

using namespace netforecast;

namespace {

GraphSeries series_of(std::vector<Graph> graphs) {
  return GraphSeries(std::move(graphs));
}

Graph triangle() {
  Graph g(3);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  return g;
}

}  // namespace

TEST_CASE("make_edge normalizes and validates") {
  CHECK(make_edge(3, 1) == Edge{1, 3});
  CHECK(make_edge(1, 3) == Edge{1, 3});
  CHECK_THROWS_AS(make_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_edge(0, 1), std::invalid_argument);
}

TEST_CASE("graph enforces endpoint range and set semantics") {
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 1);  // duplicate collapses
  CHECK(g.n_edges() == 1);
  CHECK(g.has_edge(2, 1));
  CHECK_THROWS_AS(g.add_edge(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
  CHECK(g.degree(1) == 1);
  CHECK(g.degree(3) == 0);
  CHECK_THROWS_AS(g.degree(9), std::out_of_range);
}

TEST_CASE("density") {
  Graph complete(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) complete.add_edge(i, j);
  CHECK(density(complete) == doctest::Approx(1.0));

  CHECK(density(Graph(5)) == doctest::Approx(0.0));

  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(1, 4);
  CHECK(density(g) == doctest::Approx(2.0 / 3.0));

  CHECK_THROWS_AS(density(Graph(1)), std::invalid_argument);
}

TEST_CASE("series rejects shrinking node counts") {
  GraphSeries s;
  s.push_back(Graph(3));
  s.push_back(Graph(3));
  CHECK_THROWS_AS(s.push_back(Graph(2)), std::invalid_argument);
}

TEST_CASE("first_seen is the first step with n_t >= node") {
  GraphSeries s = series_of({Graph(2), Graph(2), Graph(4), Graph(5)});
  CHECK(s.first_seen(1) == 1);
  CHECK(s.first_seen(2) == 1);
  CHECK(s.first_seen(3) == 3);
  CHECK(s.first_seen(4) == 3);
  CHECK(s.first_seen(5) == 4);
  CHECK_THROWS_AS(s.first_seen(6), std::out_of_range);
}

TEST_CASE("union_graphs") {
  Graph a(3);
  a.add_edge(1, 2);
  Graph b(3);
  b.add_edge(1, 2);
  b.add_edge(2, 3);

  SUBCASE("set union") {
    Graph u = union_graphs(series_of({a, b}));
    CHECK(u.n_nodes() == 3);
    CHECK(u.edges() == std::set<Edge>{{1, 2}, {2, 3}});
  }
  SUBCASE("idempotent on identical graphs") {
    Graph u = union_graphs(series_of({b, b, b}));
    CHECK(u == b);
  }
  SUBCASE("disjoint edge sets") {
    Graph c(4);
    c.add_edge(1, 2);
    Graph d(4);
    d.add_edge(3, 4);
    Graph u = union_graphs(series_of({c, d}));
    CHECK(u.edges() == std::set<Edge>{{1, 2}, {3, 4}});
  }
  SUBCASE("order-insensitive for same-size snapshots") {
    Graph c(3);
    c.add_edge(1, 3);
    CHECK(union_graphs(series_of({a, b, c})) ==
          union_graphs(series_of({c, b, a})));
  }
  SUBCASE("empty series rejected") {
    CHECK_THROWS_AS(union_graphs(GraphSeries{}), std::invalid_argument);
  }
}

TEST_CASE("top_k_nodes") {
  SUBCASE("star center") {
    Graph star(5);
    for (int leaf = 2; leaf <= 5; ++leaf) star.add_edge(1, leaf);
    CHECK(top_k_nodes(star, 1) == std::vector<int>{1});
  }
  SUBCASE("saturation when K >= n") {
    CHECK(top_k_nodes(triangle(), 10) == std::vector<int>{1, 2, 3});
  }
  SUBCASE("path middle node") {
    Graph path(3);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(top_k_nodes(path, 1) == std::vector<int>{2});
  }
  SUBCASE("ties broken by ascending node id") {
    Graph even(4);
    even.add_edge(1, 2);
    even.add_edge(3, 4);
    CHECK(top_k_nodes(even, 2) == std::vector<int>{1, 2});
  }
  CHECK_THROWS_AS(top_k_nodes(triangle(), 0), std::invalid_argument);
}

TEST_CASE("build_candidate") {
  GraphSeries tri = series_of({triangle()});

  SUBCASE("no augmentation") {
    CandidateGraph c = build_candidate(tri, 0, 2);
    CHECK(c.base == triangle());
    CHECK(c.n_total == 3);
    CHECK(c.new_edges.empty());
    CHECK(c.all_edges().size() == 3);
  }
  SUBCASE("complete bipartite new x kappa") {
    GraphSeries s = series_of({triangle(), triangle()});
    CandidateGraph c = build_candidate(s, 2, 3);
    CHECK(c.new_edges.size() == 6);
    CHECK(c.n_new() == 2);
  }
  SUBCASE("triangle, one new node, K=2") {
    CandidateGraph c = build_candidate(tri, 1, 2);
    CHECK(c.n_total == 4);
    CHECK(c.kappa == std::vector<int>{1, 2});
    CHECK(c.all_edges().size() == 5);
    CHECK(c.new_edges == std::set<Edge>{{1, 4}, {2, 4}});
  }
  SUBCASE("every new node has degree |kappa| in the candidate") {
    CandidateGraph c = build_candidate(tri, 3, 2);
    std::map<int, int> new_degree;
    for (const auto& [a, b] : c.new_edges) {
      CHECK(a <= c.n_existing());
      CHECK(b > c.n_existing());
      ++new_degree[b];
    }
    for (int fresh = 4; fresh <= 6; ++fresh) {
      CHECK(new_degree[fresh] == static_cast<int>(c.kappa.size()));
    }
    // base never touches new nodes
    for (const auto& [a, b] : c.base.edges()) CHECK(b <= c.n_existing());
  }
}

TEST_CASE("edge column index formula") {
  CHECK(edge_column_index(1, 2, 4) == 1);
  CHECK(edge_column_index(3, 4, 4) == 6);
  // first row, last column of row block
  for (int n : {2, 5, 9}) CHECK(edge_column_index(1, n, n) == n - 1);
  // the 4-node column order {e12, e13, e14, e23, e24, e34}
  const std::vector<Edge> order4 = {{1, 2}, {1, 3}, {1, 4},
                                    {2, 3}, {2, 4}, {3, 4}};
  for (std::size_t k = 0; k < order4.size(); ++k) {
    CHECK(edge_column_index(order4[k].first, order4[k].second, 4) ==
          static_cast<std::int64_t>(k) + 1);
  }
  CHECK_THROWS_AS(edge_column_index(2, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(edge_column_index(3, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(edge_column_index(1, 5, 4), std::invalid_argument);
}

TEST_CASE("column map is a bijection with exact inverse for n <= 12") {
  for (int n = 2; n <= 12; ++n) {
    IncidenceColumnMap map{n};
    std::set<std::int64_t> seen;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const std::int64_t k = map.column(i, j);
        CHECK(k >= 1);
        CHECK(k <= map.columns());
        CHECK(seen.insert(k).second);
        CHECK(map.edge(k) == Edge{i, j});
      }
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == map.columns());
  }
}

TEST_CASE("realized incidence columns have 0 or 2 ones, rows sum to degrees") {
  GraphSeries tri = series_of({triangle()});
  CandidateGraph c = build_candidate(tri, 1, 2);
  const int n = c.n_total;
  IncidenceColumnMap map{n};

  // Dense realization of S from the candidate edge list.
  std::vector<std::vector<int>> s(static_cast<std::size_t>(n),
                                  std::vector<int>(map.columns(), 0));
  for (const Edge& e : c.all_edges()) {
    const auto col = static_cast<std::size_t>(map.column(e.first, e.second));
    s[static_cast<std::size_t>(e.first) - 1][col - 1] = 1;
    s[static_cast<std::size_t>(e.second) - 1][col - 1] = 1;
  }

  Graph full(n);
  for (const Edge& e : c.all_edges()) full.add_edge(e.first, e.second);
  const std::vector<int> expect_deg = full.degrees();

  for (std::int64_t col = 1; col <= map.columns(); ++col) {
    int ones = 0;
    for (int row = 0; row < n; ++row) {
      ones += s[static_cast<std::size_t>(row)][static_cast<std::size_t>(col) - 1];
    }
    CHECK((ones == 0 || ones == 2));
  }
  for (int row = 0; row < n; ++row) {
    int sum = 0;
    for (std::int64_t col = 1; col <= map.columns(); ++col) {
      sum += s[static_cast<std::size_t>(row)][static_cast<std::size_t>(col) - 1];
    }
    CHECK(sum == expect_deg[static_cast<std::size_t>(row)]);
  }
}
