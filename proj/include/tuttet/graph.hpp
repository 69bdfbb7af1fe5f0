#pragma once

#include <set>
#include <utility>
#include <vector>

namespace tuttet {

// Simple undirected graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::set<int>> adj;

  Graph() = default;
  explicit Graph(int n_vertices) : n(n_vertices), adj(n_vertices) {}

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  long edge_count() const;
  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  static Graph complete(int n);
  static Graph complete_tripartite(int a, int b, int c);
  static Graph petersen();
};

bool is_connected(const Graph& g);

// Maximum number of internally vertex-disjoint s-t paths for distinct,
// non-adjacent s and t (Menger). If cut is non-null it receives a minimum
// s-t vertex separator.
int vertex_disjoint_paths(const Graph& g, int s, int t, std::vector<int>* cut = nullptr);

// Global vertex connectivity kappa(G). Complete graphs yield n-1. If cut is
// non-null and kappa < n-1, it receives a minimum vertex cut.
int vertex_connectivity(const Graph& g, std::vector<int>* cut = nullptr);

bool graphs_isomorphic(const Graph& a, const Graph& b);

}  // namespace tuttet
