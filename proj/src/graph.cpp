#include "tuttet/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace tuttet {

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self loop");
  adj[u].insert(v);
  adj[v].insert(u);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n) return false;
  return adj[u].count(v) > 0;
}

long Graph::edge_count() const {
  long deg_sum = 0;
  for (const auto& s : adj) deg_sum += static_cast<long>(s.size());
  return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::complete_tripartite(int a, int b, int c) {
  Graph g(a + b + c);
  auto part = [&](int v) { return v < a ? 0 : (v < a + b ? 1 : 2); };
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (part(u) != part(v)) g.add_edge(u, v);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
  }
  return count == g.n;
}

namespace {

// Unit-capacity flow network with vertex splitting: node 2v is the "in" copy
// of v, node 2v+1 the "out" copy.
struct SplitFlow {
  int n;
  std::vector<std::vector<int>> to;    // arc head
  std::vector<std::vector<int>> cap;   // residual capacity
  std::vector<std::vector<int>> rev;   // index of reverse arc

  explicit SplitFlow(const Graph& g) : n(2 * g.n), to(n), cap(n), rev(n) {
    for (int v = 0; v < g.n; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (int u = 0; u < g.n; ++u)
      for (int v : g.adj[u])
        if (u < v) {
          add_arc(2 * u + 1, 2 * v, 1);
          add_arc(2 * v + 1, 2 * u, 1);
        }
  }

  void add_arc(int a, int b, int c) {
    to[a].push_back(b);
    cap[a].push_back(c);
    rev[a].push_back(static_cast<int>(to[b].size()));
    to[b].push_back(a);
    cap[b].push_back(0);
    rev[b].push_back(static_cast<int>(to[a].size()) - 1);
  }

  // One BFS augmentation of value 1; returns false when no augmenting path.
  bool augment(int s, int t) {
    std::vector<int> pre_node(n, -1), pre_arc(n, -1);
    std::queue<int> q;
    q.push(s);
    pre_node[s] = s;
    while (!q.empty() && pre_node[t] < 0) {
      int u = q.front();
      q.pop();
      for (size_t i = 0; i < to[u].size(); ++i) {
        int v = to[u][i];
        if (cap[u][i] > 0 && pre_node[v] < 0) {
          pre_node[v] = u;
          pre_arc[v] = static_cast<int>(i);
          q.push(v);
        }
      }
    }
    if (pre_node[t] < 0) return false;
    for (int v = t; v != s; v = pre_node[v]) {
      int u = pre_node[v], i = pre_arc[v];
      cap[u][i] -= 1;
      cap[v][rev[u][i]] += 1;
    }
    return true;
  }

  // Vertices v (not s, t) whose split arc crosses the min cut: 2v reachable
  // from s in the residual network but 2v+1 not.
  std::vector<int> min_cut_vertices(int s, int t) const {
    std::vector<char> reach(n, 0);
    std::queue<int> q;
    q.push(s);
    reach[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (size_t i = 0; i < to[u].size(); ++i)
        if (cap[u][i] > 0 && !reach[to[u][i]]) {
          reach[to[u][i]] = 1;
          q.push(to[u][i]);
        }
    }
    std::vector<int> cut;
    for (int v = 0; v < n / 2; ++v)
      if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    return cut;
  }
};

}  // namespace

int vertex_disjoint_paths(const Graph& g, int s, int t, std::vector<int>* cut) {
  assert(s != t && !g.has_edge(s, t));
  SplitFlow net(g);
  int flow = 0;
  while (net.augment(2 * s + 1, 2 * t)) ++flow;
  if (cut) *cut = net.min_cut_vertices(2 * s + 1, 2 * t);
  return flow;
}

int vertex_connectivity(const Graph& g, std::vector<int>* cut) {
  if (cut) cut->clear();
  if (g.n <= 1) return 0;
  if (!is_connected(g)) return 0;

  long max_edges = static_cast<long>(g.n) * (g.n - 1) / 2;
  if (g.edge_count() == max_edges) return g.n - 1;

  // kappa(G) for non-complete G: take a minimum-degree vertex v and minimize
  // over flows from v to its non-neighbors and between non-adjacent pairs of
  // its neighbors. Either some minimum cut avoids v (first family) or every
  // minimum cut contains v and separates two of its neighbors (second).
  int v = 0;
  for (int u = 1; u < g.n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;

  int best = g.degree(v);
  std::vector<int> best_cut(g.adj[v].begin(), g.adj[v].end());

  auto consider = [&](int s, int t) {
    std::vector<int> c;
    int k = vertex_disjoint_paths(g, s, t, &c);
    if (k < best) {
      best = k;
      best_cut = std::move(c);
    }
  };

  for (int u = 0; u < g.n; ++u)
    if (u != v && !g.has_edge(v, u)) consider(v, u);
  std::vector<int> nb(g.adj[v].begin(), g.adj[v].end());
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j])) consider(nb[i], nb[j]);

  if (cut && best < g.n - 1) *cut = best_cut;
  return best;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                        std::vector<char>& used_b, int next) {
  if (next == a.n) return true;
  for (int candidate = 0; candidate < b.n; ++candidate) {
    if (used_b[candidate] || a.degree(next) != b.degree(candidate)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (a.has_edge(next, prev) != b.has_edge(candidate, map_ab[prev])) ok = false;
    if (!ok) continue;
    map_ab[next] = candidate;
    used_b[candidate] = 1;
    if (extend_isomorphism(a, b, map_ab, used_b, next + 1)) return true;
    used_b[candidate] = 0;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map_ab(a.n, -1);
  std::vector<char> used_b(b.n, 0);
  return extend_isomorphism(a, b, map_ab, used_b, 0);
}

}  // namespace tuttet
