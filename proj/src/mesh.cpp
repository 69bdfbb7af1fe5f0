#include "tuttet/mesh.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include <Eigen/Geometry>

namespace tuttet {

FaceKey make_face(int a, int b, int c) {
  FaceKey f{a, b, c};
  std::sort(f.begin(), f.end());
  return f;
}

EdgeKey make_edge(int a, int b) {
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

std::vector<int> Complex::interior_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_vertices(); ++v)
    if (!is_boundary_vertex(v)) out.push_back(v);
  return out;
}

int Complex::opposite_vertex(int tet_id, const FaceKey& face) const {
  for (int v : mesh.tets[tet_id])
    if (v != face[0] && v != face[1] && v != face[2]) return v;
  throw Error(ErrorCode::InvalidMesh, "face not incident on tet");
}

std::array<std::array<int, 3>, 4> induced_faces(const Tet& t) {
  // Boundary of the oriented 3-simplex [t0,t1,t2,t3].
  return {{{t[1], t[2], t[3]}, {t[0], t[3], t[2]}, {t[0], t[1], t[3]}, {t[0], t[2], t[1]}}};
}

namespace {

// Parity of a face triple relative to its sorted order: cyclic orientation
// class of a triangle. Two induced orientations are opposite iff parities
// differ.
int triple_parity(const std::array<int, 3>& t) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (t[i] > t[j]) ++inversions;
  return inversions % 2;
}

std::string face_str(const FaceKey& f) {
  std::ostringstream os;
  os << "(" << f[0] << "," << f[1] << "," << f[2] << ")";
  return os.str();
}

std::string edge_str(const EdgeKey& e) {
  std::ostringstream os;
  os << "(" << e[0] << "," << e[1] << ")";
  return os.str();
}

void validate_tet_mesh(const TetMesh& mesh) {
  if (mesh.n_vertices < 4 || mesh.tets.empty())
    throw Error(ErrorCode::InvalidMesh, "mesh needs at least one tet and four vertices");
  if (mesh.coords && static_cast<int>(mesh.coords->size()) != mesh.n_vertices)
    throw Error(ErrorCode::InconsistentCounts, "coordinate count does not match vertex count");
  std::set<std::array<int, 4>> seen;
  std::vector<char> used(mesh.n_vertices, 0);
  for (const Tet& t : mesh.tets) {
    std::array<int, 4> key = t;
    std::sort(key.begin(), key.end());
    for (int v : t) {
      if (v < 0 || v >= mesh.n_vertices)
        throw Error(ErrorCode::IndexOutOfRange, "tet vertex id out of range");
      used[v] = 1;
    }
    if (key[0] == key[1] || key[1] == key[2] || key[2] == key[3])
      throw Error(ErrorCode::InvalidMesh, "tet with repeated vertex");
    if (!seen.insert(key).second) throw Error(ErrorCode::InvalidMesh, "duplicate tet");
  }
  for (int v = 0; v < mesh.n_vertices; ++v)
    if (!used[v]) throw Error(ErrorCode::InvalidMesh, "vertex " + std::to_string(v) + " not used by any tet");
}

double tet_volume6(const std::vector<Vec3>& x, const Tet& t) {
  return (x[t[1]] - x[t[0]]).cross(x[t[2]] - x[t[0]]).dot(x[t[3]] - x[t[0]]);
}

}  // namespace

Complex build_complex(const TetMesh& mesh) {
  validate_tet_mesh(mesh);

  Complex c;
  c.mesh = mesh;
  c.vertex_tets.resize(mesh.n_vertices);

  for (int ti = 0; ti < static_cast<int>(mesh.tets.size()); ++ti) {
    const Tet& t = mesh.tets[ti];
    for (int v : t) c.vertex_tets[v].push_back(ti);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) c.edge_tets[make_edge(t[i], t[j])].push_back(ti);
    c.face_tets[make_face(t[1], t[2], t[3])].push_back(ti);
    c.face_tets[make_face(t[0], t[2], t[3])].push_back(ti);
    c.face_tets[make_face(t[0], t[1], t[3])].push_back(ti);
    c.face_tets[make_face(t[0], t[1], t[2])].push_back(ti);
  }

  for (const auto& [face, tets] : c.face_tets) {
    if (tets.size() > 2)
      throw Error(ErrorCode::FaceOverShared,
                  "face " + face_str(face) + " incident on " + std::to_string(tets.size()) + " tets");
    if (tets.size() == 1) {
      c.boundary_faces.insert(face);
      for (int v : face) c.boundary_vertices.insert(v);
    }
  }

  // Manifold edges: the tets around an edge must form a single fan, a cycle
  // for interior edges and a path ending at two boundary faces otherwise.
  for (const auto& [edge, tets] : c.edge_tets) {
    int boundary_faces_here = 0;
    std::map<int, int> local;  // tet id -> local index
    for (size_t i = 0; i < tets.size(); ++i) local[tets[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> fan_adj(tets.size());
    for (int v = 0; v < mesh.n_vertices; ++v) {
      if (v == edge[0] || v == edge[1]) continue;
      auto it = c.face_tets.find(make_face(edge[0], edge[1], v));
      if (it == c.face_tets.end()) continue;
      const auto& ft = it->second;
      if (ft.size() == 1) ++boundary_faces_here;
      if (ft.size() == 2) {
        fan_adj[local[ft[0]]].push_back(local[ft[1]]);
        fan_adj[local[ft[1]]].push_back(local[ft[0]]);
      }
    }
    std::vector<char> seen(tets.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    size_t reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : fan_adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
    }
    bool interior_edge = boundary_faces_here == 0;
    if (reached != tets.size() || (!interior_edge && boundary_faces_here != 2))
      throw Error(ErrorCode::NonManifoldEdge, "edge " + edge_str(edge) + " has a broken tet fan");
  }

  // Orient tets consistently by BFS over the dual graph.
  const int n_tets = static_cast<int>(mesh.tets.size());
  c.oriented_tets = mesh.tets;
  std::vector<char> visited(n_tets, 0);
  std::queue<int> q;
  q.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int ti = q.front();
    q.pop();
    for (const auto& tri : induced_faces(c.oriented_tets[ti])) {
      FaceKey key = make_face(tri[0], tri[1], tri[2]);
      for (int tj : c.face_tets[key]) {
        if (tj == ti) continue;
        // Locate tj's induced orientation of the shared face.
        std::array<int, 3> other{};
        for (const auto& tri_j : induced_faces(c.oriented_tets[tj]))
          if (make_face(tri_j[0], tri_j[1], tri_j[2]) == key) other = tri_j;
        bool opposite = triple_parity(tri) != triple_parity(other);
        if (!visited[tj]) {
          if (!opposite) std::swap(c.oriented_tets[tj][2], c.oriented_tets[tj][3]);
          visited[tj] = 1;
          ++reached;
          q.push(tj);
        } else if (!opposite) {
          throw Error(ErrorCode::NonOrientable, "orientation conflict across face " + face_str(key));
        }
      }
    }
  }
  if (reached != n_tets)
    throw Error(ErrorCode::DisconnectedDual, "tet adjacency graph is not connected");

  // With coordinates, fix the global flip by the seed tet's signed volume.
  if (mesh.coords) {
    if (tet_volume6(*mesh.coords, c.oriented_tets[0]) < 0.0)
      for (Tet& t : c.oriented_tets) std::swap(t[2], t[3]);
  }
  return c;
}

EulerCheck euler_check(const Complex& c) {
  EulerCheck r;
  r.chi_complex = c.n_vertices() - c.n_edges() + c.n_faces() - c.n_tets();

  std::set<EdgeKey> boundary_edges;
  for (const FaceKey& f : c.boundary_faces) {
    boundary_edges.insert(make_edge(f[0], f[1]));
    boundary_edges.insert(make_edge(f[0], f[2]));
    boundary_edges.insert(make_edge(f[1], f[2]));
  }
  r.chi_boundary = static_cast<int>(c.boundary_vertices.size()) -
                   static_cast<int>(boundary_edges.size()) +
                   static_cast<int>(c.boundary_faces.size());

  r.complex_connected = is_connected(mesh_graph(c));

  // Boundary surface connectivity via face adjacency across boundary edges.
  if (!c.boundary_faces.empty()) {
    std::map<EdgeKey, std::vector<int>> edge_faces;
    std::vector<FaceKey> faces(c.boundary_faces.begin(), c.boundary_faces.end());
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
      const FaceKey& f = faces[i];
      edge_faces[make_edge(f[0], f[1])].push_back(i);
      edge_faces[make_edge(f[0], f[2])].push_back(i);
      edge_faces[make_edge(f[1], f[2])].push_back(i);
    }
    std::vector<char> seen(faces.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    size_t reached = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      const FaceKey& f = faces[i];
      for (const EdgeKey& e : {make_edge(f[0], f[1]), make_edge(f[0], f[2]), make_edge(f[1], f[2])})
        for (int j : edge_faces[e])
          if (!seen[j]) {
            seen[j] = 1;
            ++reached;
            q.push(j);
          }
    }
    r.boundary_connected = reached == faces.size();
  }

  r.is_ball_candidate =
      r.chi_complex == 1 && r.chi_boundary == 2 && r.complex_connected && r.boundary_connected;
  return r;
}

int LinkGraph::local_index(int global_id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), global_id);
  if (it == vertices.end() || *it != global_id) return -1;
  return static_cast<int>(it - vertices.begin());
}

int LinkGraph::euler_characteristic() const {
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) +
         static_cast<int>(faces.size());
}

LinkGraph vertex_link(const Complex& c, int v) {
  if (v < 0 || v >= c.n_vertices()) throw Error(ErrorCode::IndexOutOfRange, "vertex id out of range");
  LinkGraph link;
  link.center = v;

  std::set<int> vert_set;
  std::set<EdgeKey> edge_set;
  for (int ti : c.vertex_tets[v]) {
    const Tet& t = c.mesh.tets[ti];
    std::array<int, 3> others{};
    int k = 0;
    for (int w : t)
      if (w != v) others[k++] = w;
    link.faces.push_back(make_face(others[0], others[1], others[2]));
    for (int w : others) vert_set.insert(w);
  }
  // Link edges: pairs forming a complex face together with the center.
  for (const auto& [face, tets] : c.face_tets) {
    (void)tets;
    if (face[0] == v) edge_set.insert(make_edge(face[1], face[2]));
    else if (face[1] == v) edge_set.insert(make_edge(face[0], face[2]));
    else if (face[2] == v) edge_set.insert(make_edge(face[0], face[1]));
  }
  link.vertices.assign(vert_set.begin(), vert_set.end());
  link.edges.assign(edge_set.begin(), edge_set.end());
  std::sort(link.faces.begin(), link.faces.end());

  link.graph = Graph(static_cast<int>(link.vertices.size()));
  for (const EdgeKey& e : link.edges)
    link.graph.add_edge(link.local_index(e[0]), link.local_index(e[1]));

  // Closed iff every link edge lies on exactly two link triangles.
  std::map<EdgeKey, int> edge_face_count;
  for (const FaceKey& f : link.faces) {
    edge_face_count[make_edge(f[0], f[1])]++;
    edge_face_count[make_edge(f[0], f[2])]++;
    edge_face_count[make_edge(f[1], f[2])]++;
  }
  link.is_closed = !link.edges.empty();
  for (const EdgeKey& e : link.edges)
    if (edge_face_count[e] != 2) link.is_closed = false;
  return link;
}

Graph mesh_graph(const Complex& c) {
  Graph g(c.n_vertices());
  for (const auto& [edge, tets] : c.edge_tets) {
    (void)tets;
    g.add_edge(edge[0], edge[1]);
  }
  return g;
}

std::vector<std::array<int, 3>> oriented_boundary_triangles(const Complex& c) {
  std::vector<std::array<int, 3>> out;
  for (int ti = 0; ti < c.n_tets(); ++ti)
    for (const auto& tri : induced_faces(c.oriented_tets[ti]))
      if (c.boundary_faces.count(make_face(tri[0], tri[1], tri[2]))) out.push_back(tri);
  return out;
}

double bbox_diagonal(const std::vector<Vec3>& coords) {
  if (coords.empty()) return 0.0;
  Vec3 lo = coords.front(), hi = coords.front();
  for (const Vec3& p : coords) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return (hi - lo).norm();
}

}  // namespace tuttet
