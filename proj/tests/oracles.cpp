#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include <Eigen/Dense>

namespace oracles {

using tuttet::Graph;

namespace {

bool connected_without(const Graph& g, const std::vector<char>& removed) {
  int start = -1, expected = 0;
  for (int v = 0; v < g.n; ++v)
    if (!removed[v]) {
      if (start < 0) start = v;
      ++expected;
    }
  if (expected <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.adj[u])
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == expected;
}

bool any_subset_disconnects(const Graph& g, std::vector<char>& removed, int from, int left) {
  if (left == 0) return !connected_without(g, removed);
  if (!connected_without(g, removed)) return true;
  for (int v = from; v < g.n; ++v) {
    removed[v] = 1;
    if (any_subset_disconnects(g, removed, v + 1, left - 1)) return true;
    removed[v] = 0;
  }
  return false;
}

}  // namespace

bool brute_force_k_connected(const Graph& g, int k) {
  if (g.n <= k) return false;
  std::vector<char> removed(g.n, 0);
  for (int size = 0; size < k; ++size)
    if (any_subset_disconnects(g, removed, 0, size)) return false;
  return true;
}

bool cut_separates(const Graph& g, const std::vector<int>& cut) {
  std::vector<char> removed(g.n, 0);
  for (int v : cut) removed[v] = 1;
  return !connected_without(g, removed);
}

namespace {

// Compact labeled graph for the minor recursion, at most 16 vertices.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, 16> rows{};

  static SmallGraph from(const Graph& g) {
    SmallGraph s;
    s.n = g.n;
    for (int u = 0; u < g.n; ++u)
      for (int v : g.adj[u]) s.rows[u] |= static_cast<std::uint16_t>(1u << v);
    return s;
  }

  int degree(int v) const { return __builtin_popcount(rows[v]); }
  bool has_edge(int u, int v) const { return rows[u] & (1u << v); }
  long edge_count() const {
    long total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
  }

  SmallGraph delete_vertex(int v) const {
    SmallGraph out;
    out.n = n - 1;
    auto remap_mask = [&](std::uint16_t m) {
      std::uint16_t low = m & static_cast<std::uint16_t>((1u << v) - 1);
      std::uint16_t high = static_cast<std::uint16_t>((m >> (v + 1)) << v);
      return static_cast<std::uint16_t>(low | high);
    };
    int k = 0;
    for (int u = 0; u < n; ++u)
      if (u != v) out.rows[k++] = remap_mask(static_cast<std::uint16_t>(rows[u] & ~(1u << v)));
    return out;
  }

  SmallGraph delete_edge(int u, int v) const {
    SmallGraph out = *this;
    out.rows[u] &= static_cast<std::uint16_t>(~(1u << v));
    out.rows[v] &= static_cast<std::uint16_t>(~(1u << u));
    return out;
  }

  // Contract (u,v): v merges into u, loops dropped, parallels collapsed.
  SmallGraph contract_edge(int u, int v) const {
    SmallGraph merged = *this;
    merged.rows[u] |= rows[v];
    merged.rows[u] &= static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
    for (int w = 0; w < n; ++w)
      if (w != u && (rows[w] & (1u << v))) merged.rows[w] |= static_cast<std::uint16_t>(1u << u);
    return merged.delete_vertex(v);
  }

  // Exact memo key: vertex count plus the adjacency rows.
  std::string key() const {
    std::string k;
    k.reserve(1 + 2 * n);
    k.push_back(static_cast<char>(n));
    for (int v = 0; v < n; ++v) {
      k.push_back(static_cast<char>(rows[v] & 0xff));
      k.push_back(static_cast<char>(rows[v] >> 8));
    }
    return k;
  }

  Graph to_graph() const {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (has_edge(u, v)) g.add_edge(u, v);
    return g;
  }
};

struct MinorRecursion {
  Graph pattern;
  long pattern_edges;
  std::unordered_map<std::string, bool> memo;

  // Vertices of degree <= 1 cannot take part in a model of a pattern whose
  // minimum degree is at least 2; drop them up front.
  SmallGraph normalize(SmallGraph g) const {
    bool again = true;
    while (again) {
      again = false;
      for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= 1) {
          g = g.delete_vertex(v);
          again = true;
          break;
        }
    }
    return g;
  }

  bool run(SmallGraph g) {
    g = normalize(g);
    if (g.n < pattern.n || g.edge_count() < pattern_edges) return false;
    const std::string k = g.key();
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    memo[k] = false;  // guards against re-entry; overwritten below

    bool answer = false;
    if (g.n == pattern.n && g.edge_count() == pattern_edges)
      answer = tuttet::graphs_isomorphic(g.to_graph(), pattern);
    if (!answer) {
      for (int u = 0; u < g.n && !answer; ++u)
        for (int v = u + 1; v < g.n && !answer; ++v) {
          if (!g.has_edge(u, v)) continue;
          answer = run(g.delete_edge(u, v)) || run(g.contract_edge(u, v));
        }
      for (int v = 0; v < g.n && !answer; ++v) answer = run(g.delete_vertex(v));
    }
    memo[k] = answer;
    return answer;
  }
};

}  // namespace

bool brute_force_has_minor(const Graph& host, const Graph& pattern) {
  if (host.n > 16) throw std::invalid_argument("oracle limited to 16 vertices");
  int min_deg = host.n;
  for (int v = 0; v < pattern.n; ++v) min_deg = std::min(min_deg, pattern.degree(v));
  if (min_deg < 2) throw std::invalid_argument("oracle expects pattern min degree >= 2");
  MinorRecursion rec{pattern, pattern.edge_count(), {}};
  return rec.run(SmallGraph::from(host));
}

int brute_force_containing_tets(const tuttet::RealizedMesh& realized, const tuttet::Vec3& p,
                                double eps_bary) {
  int count = 0;
  for (const tuttet::Tet& t : realized.complex.oriented_tets) {
    const tuttet::Vec3& a = realized.coords[t[0]];
    Eigen::Matrix3d m;
    m.col(0) = realized.coords[t[1]] - a;
    m.col(1) = realized.coords[t[2]] - a;
    m.col(2) = realized.coords[t[3]] - a;
    if (std::abs(m.determinant()) < 1e-300) continue;
    const tuttet::Vec3 lambda = m.fullPivLu().solve(p - a);
    const double l0 = 1.0 - lambda.sum();
    if (l0 > eps_bary && lambda.x() > eps_bary && lambda.y() > eps_bary && lambda.z() > eps_bary)
      ++count;
  }
  return count;
}

tuttet::TetMesh two_tet_mesh() {
  tuttet::TetMesh m;
  m.n_vertices = 5;
  m.tets = {{0, 1, 2, 3}, {0, 1, 2, 4}};
  m.coords = {{tuttet::Vec3(0, 0, 0), tuttet::Vec3(1, 0, 0), tuttet::Vec3(0, 1, 0),
               tuttet::Vec3(0.2, 0.2, 1), tuttet::Vec3(0.2, 0.2, -1)}};
  return m;
}

tuttet::TetMesh ear_mesh() {
  tuttet::TetMesh m;
  m.n_vertices = 6;
  m.tets = {{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}, {0, 1, 2, 5}};
  m.coords = {{tuttet::Vec3(0, 0, 0), tuttet::Vec3(1, 0, 0), tuttet::Vec3(0, 1, 0),
               tuttet::Vec3(0, 0, 1), tuttet::Vec3(0.25, 0.25, 0.25), tuttet::Vec3(0.3, 0.3, -0.8)}};
  return m;
}

tuttet::TetMesh edge_glued_mesh() {
  tuttet::TetMesh m;
  m.n_vertices = 6;
  m.tets = {{0, 1, 2, 3}, {0, 1, 4, 5}};
  return m;
}

tuttet::TetMesh vertex_glued_mesh() {
  tuttet::TetMesh m;
  m.n_vertices = 7;
  m.tets = {{0, 1, 2, 3}, {0, 4, 5, 6}};
  return m;
}

tuttet::Graph bipyramid_graph() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  for (int apex : {3, 4})
    for (int base : {0, 1, 2}) g.add_edge(apex, base);
  return g;
}

}  // namespace oracles
