#include "tuttet/minors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace tuttet {

const char* minor_answer_name(MinorAnswer a) {
  switch (a) {
    case MinorAnswer::Yes: return "yes";
    case MinorAnswer::No: return "no";
    case MinorAnswer::Unknown: return "unknown";
  }
  return "unknown";
}

bool verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model) {
  if (static_cast<int>(model.branch_sets.size()) != pattern.n) return false;
  std::vector<int> owner(host.n, -1);
  for (int p = 0; p < pattern.n; ++p) {
    const auto& set = model.branch_sets[p];
    if (set.empty()) return false;
    for (int h : set) {
      if (h < 0 || h >= host.n || owner[h] != -1) return false;
      owner[h] = p;
    }
    // Branch set connectivity.
    std::vector<int> stack{set[0]};
    std::set<int> seen{set[0]};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : host.adj[u])
        if (owner[w] == p && !seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    if (seen.size() != set.size()) return false;
  }
  for (auto [p, q] : pattern.edges()) {
    bool covered = false;
    for (int h : model.branch_sets[p]) {
      for (int w : host.adj[h])
        if (owner[w] == q) {
          covered = true;
          break;
        }
      if (covered) break;
    }
    if (!covered) return false;
  }
  return true;
}

namespace {

struct MinorSearch {
  const Graph& host;
  const Graph& pattern;
  long budget;
  long nodes = 0;
  bool out_of_budget = false;

  std::vector<int> owner;                 // host vertex -> pattern vertex or -1
  std::vector<std::vector<int>> branch;   // pattern vertex -> host vertices
  std::vector<int> order;                 // pattern vertices in seeding order
  std::vector<int> clazz;                 // interchangeability class per pattern vertex

  MinorSearch(const Graph& h, const Graph& p, long b)
      : host(h), pattern(p), budget(b), owner(h.n, -1), branch(p.n) {
    compute_classes();
  }

  // Pattern vertices whose transposition is an automorphism can be seeded in
  // increasing host order; classes are components of the interchangeability
  // relation.
  void compute_classes() {
    clazz.assign(pattern.n, -1);
    auto interchangeable = [&](int u, int v) {
      std::set<int> nu = pattern.adj[u], nv = pattern.adj[v];
      nu.erase(v);
      nv.erase(u);
      return nu == nv;
    };
    int next = 0;
    for (int u = 0; u < pattern.n; ++u) {
      if (clazz[u] >= 0) continue;
      clazz[u] = next;
      std::deque<int> q{u};
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int v = 0; v < pattern.n; ++v)
          if (clazz[v] < 0 && interchangeable(x, v)) {
            clazz[v] = next;
            q.push_back(v);
          }
      }
      ++next;
    }
    order.resize(pattern.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return clazz[a] < clazz[b]; });
  }

  bool tick() {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    return true;
  }

  bool edge_covered(int p, int q) const {
    for (int h : branch[p])
      for (int w : host.adj[h])
        if (owner[w] == q) return true;
    return false;
  }

  // Unused host vertices adjacent to branch[p].
  std::vector<int> attachments(int p) const {
    std::set<int> out;
    for (int h : branch[p])
      for (int w : host.adj[h])
        if (owner[w] < 0) out.insert(w);
    return {out.begin(), out.end()};
  }

  bool seed(size_t idx) {
    if (!tick()) return false;
    if (idx == order.size()) return grow();
    int p = order[idx];
    // Symmetry breaking: within a class, seeds increase.
    int lower = -1;
    if (idx > 0 && clazz[order[idx - 1]] == clazz[p]) lower = branch[order[idx - 1]][0];
    for (int h = lower + 1; h < host.n; ++h) {
      if (owner[h] >= 0) continue;
      owner[h] = p;
      branch[p] = {h};
      if (seed(idx + 1)) return true;
      if (out_of_budget) return false;
      branch[p].clear();
      owner[h] = -1;
    }
    return false;
  }

  bool grow() {
    if (!tick()) return false;
    // Pick the uncovered pattern edge with the fewest growth moves.
    int best_p = -1, best_q = -1;
    std::vector<int> best_ap, best_aq;
    size_t best_moves = SIZE_MAX;
    for (auto [p, q] : pattern.edges()) {
      if (edge_covered(p, q)) continue;
      auto ap = attachments(p), aq = attachments(q);
      size_t moves = ap.size() + aq.size();
      if (moves == 0) return false;  // edge can never be covered
      if (moves < best_moves) {
        best_moves = moves;
        best_p = p;
        best_q = q;
        best_ap = std::move(ap);
        best_aq = std::move(aq);
      }
    }
    if (best_p < 0) return true;  // all pattern edges covered
    for (int h : best_ap) {
      owner[h] = best_p;
      branch[best_p].push_back(h);
      if (grow()) return true;
      if (out_of_budget) return false;
      branch[best_p].pop_back();
      owner[h] = -1;
    }
    for (int h : best_aq) {
      owner[h] = best_q;
      branch[best_q].push_back(h);
      if (grow()) return true;
      if (out_of_budget) return false;
      branch[best_q].pop_back();
      owner[h] = -1;
    }
    return false;
  }
};

}  // namespace

MinorQueryResult has_minor(const Graph& host, const Graph& pattern, long budget) {
  if (budget <= 0) throw std::invalid_argument("budget must be positive");
  if (pattern.n == 0 || !is_connected(pattern))
    throw std::invalid_argument("pattern must be connected and non-empty");

  MinorQueryResult result;
  if (host.n < pattern.n || host.edge_count() < pattern.edge_count()) {
    result.answer = MinorAnswer::No;
    return result;
  }

  MinorSearch search(host, pattern, budget);
  bool found = search.seed(0);
  result.nodes_explored = search.nodes;
  if (found) {
    MinorModel model{search.branch};
    if (!verify_minor_model(host, pattern, model))
      throw std::logic_error("minor search produced an invalid model");
    result.answer = MinorAnswer::Yes;
    result.model = std::move(model);
  } else if (search.out_of_budget) {
    result.answer = MinorAnswer::Unknown;
  } else {
    result.answer = MinorAnswer::No;
  }
  return result;
}

Graph k6_pattern() { return Graph::complete(6); }

Graph k331_pattern() { return Graph::complete_tripartite(3, 3, 1); }

LinklessExclusion linkless_exclusion_check(const Graph& graph, long budget) {
  LinklessExclusion r;
  r.k6 = has_minor(graph, k6_pattern(), budget);
  r.k331 = has_minor(graph, k331_pattern(), budget);
  return r;
}

CliqueBound four_clique_bound_check(const Graph& g) {
  if (g.n < 4) throw std::invalid_argument("need at least 4 vertices");
  CliqueBound r;
  r.bound = 4L * g.n - 15;
  // Count each 4-clique once via its two smallest vertices.
  for (auto [i, j] : g.edges()) {
    std::vector<int> common;
    std::set_intersection(g.adj[i].begin(), g.adj[i].end(), g.adj[j].begin(), g.adj[j].end(),
                          std::back_inserter(common));
    for (size_t a = 0; a < common.size(); ++a) {
      if (common[a] <= j) continue;
      for (size_t b = a + 1; b < common.size(); ++b)
        if (g.has_edge(common[a], common[b])) ++r.clique_count;
    }
  }
  r.implies_k6 = r.clique_count > r.bound;
  return r;
}

namespace {

// Delta-wye: replace triangle (a,b,c) by a new vertex joined to a, b, c.
Graph delta_wye(const Graph& g, int a, int b, int c) {
  Graph out(g.n + 1);
  for (auto [u, v] : g.edges()) {
    bool in_triangle = (u == a && v == b) || (u == a && v == c) || (u == b && v == c) ||
                       (u == b && v == a) || (u == c && v == a) || (u == c && v == b);
    if (!in_triangle) out.add_edge(u, v);
  }
  out.add_edge(g.n, a);
  out.add_edge(g.n, b);
  out.add_edge(g.n, c);
  return out;
}

// Wye-delta: remove a degree-3 vertex with pairwise non-adjacent neighbors
// and connect the neighbors into a triangle.
std::optional<Graph> wye_delta(const Graph& g, int v) {
  if (g.degree(v) != 3) return std::nullopt;
  std::vector<int> nb(g.adj[v].begin(), g.adj[v].end());
  if (g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) || g.has_edge(nb[1], nb[2]))
    return std::nullopt;
  Graph out(g.n - 1);
  auto remap = [&](int u) { return u < v ? u : u - 1; };
  for (auto [a, b] : g.edges())
    if (a != v && b != v) out.add_edge(remap(a), remap(b));
  out.add_edge(remap(nb[0]), remap(nb[1]));
  out.add_edge(remap(nb[0]), remap(nb[2]));
  out.add_edge(remap(nb[1]), remap(nb[2]));
  return out;
}

std::vector<Graph> compute_petersen_family() {
  std::vector<Graph> family{Graph::complete(6)};
  std::deque<Graph> queue{family.front()};
  auto known = [&](const Graph& g) {
    for (const Graph& f : family)
      if (graphs_isomorphic(f, g)) return true;
    return false;
  };
  while (!queue.empty()) {
    Graph g = queue.front();
    queue.pop_front();
    std::vector<Graph> next;
    for (int a = 0; a < g.n; ++a)
      for (int b = a + 1; b < g.n; ++b)
        for (int c = b + 1; c < g.n; ++c)
          if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
            next.push_back(delta_wye(g, a, b, c));
    for (int v = 0; v < g.n; ++v)
      if (auto reduced = wye_delta(g, v)) next.push_back(*reduced);
    for (Graph& h : next)
      if (!known(h)) {
        family.push_back(h);
        queue.push_back(family.back());
      }
  }
  std::sort(family.begin(), family.end(), [](const Graph& a, const Graph& b) { return a.n < b.n; });
  return family;
}

}  // namespace

const std::vector<Graph>& petersen_family() {
  static const std::vector<Graph> family = compute_petersen_family();
  return family;
}

}  // namespace tuttet
