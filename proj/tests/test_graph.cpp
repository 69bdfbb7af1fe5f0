#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tuttet/graph.hpp"

using tuttet::Graph;

TEST_CASE("complete graph connectivity is n-1") {
  CHECK(tuttet::vertex_connectivity(Graph::complete(5)) == 4);
  CHECK(tuttet::vertex_connectivity(Graph::complete(6)) == 5);
  CHECK(tuttet::vertex_connectivity(Graph::complete(2)) == 1);
}

TEST_CASE("bipyramid graph has the 3-cut of base vertices") {
  const Graph g = oracles::bipyramid_graph();
  std::vector<int> cut;
  CHECK(tuttet::vertex_connectivity(g, &cut) == 3);
  REQUIRE(cut.size() == 3);
  CHECK(oracles::cut_separates(g, cut));
  CHECK(std::set<int>(cut.begin(), cut.end()) == std::set<int>{0, 1, 2});
}

TEST_CASE("petersen graph is 3-connected") {
  CHECK(tuttet::vertex_connectivity(Graph::petersen()) == 3);
}

TEST_CASE("disconnected and trivial graphs") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_FALSE(tuttet::is_connected(g));
  CHECK(tuttet::vertex_connectivity(g) == 0);
  CHECK(tuttet::vertex_connectivity(Graph(1)) == 0);
}

TEST_CASE("connectivity agrees with brute force on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 8);  // up to 12 vertices
    const double p = 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<double>(rng() % 1000) / 1000.0 < p) g.add_edge(u, v);
    if (!tuttet::is_connected(g)) continue;
    const int kappa = tuttet::vertex_connectivity(g);
    for (int k = 1; k <= 4; ++k)
      CHECK(oracles::brute_force_k_connected(g, k) == (kappa >= k));
  }
}

TEST_CASE("returned cuts separate") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 6);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 45) g.add_edge(u, v);
    if (!tuttet::is_connected(g)) continue;
    std::vector<int> cut;
    const int kappa = tuttet::vertex_connectivity(g, &cut);
    if (kappa < n - 1) {
      CHECK(static_cast<int>(cut.size()) == kappa);
      CHECK(oracles::cut_separates(g, cut));
    }
  }
}

TEST_CASE("graph isomorphism basics") {
  CHECK(tuttet::graphs_isomorphic(Graph::petersen(), Graph::petersen()));
  CHECK_FALSE(tuttet::graphs_isomorphic(Graph::complete(5), Graph::complete(6)));
  // C5 vs P5: same size and order, different structure.
  Graph c5(5), p5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 4; ++i) p5.add_edge(i, i + 1);
  p5.add_edge(0, 2);
  CHECK(c5.edge_count() == p5.edge_count());
  CHECK_FALSE(tuttet::graphs_isomorphic(c5, p5));
  // Relabeled K_{3,3,1}.
  Graph a = Graph::complete_tripartite(3, 3, 1);
  Graph b(7);
  std::vector<int> perm{6, 2, 4, 0, 5, 1, 3};
  for (auto [u, v] : a.edges()) b.add_edge(perm[u], perm[v]);
  CHECK(tuttet::graphs_isomorphic(a, b));
}
