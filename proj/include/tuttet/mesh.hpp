#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <Eigen/Core>

#include "tuttet/graph.hpp"
#include "tuttet/types.hpp"

namespace tuttet {

using Vec3 = Eigen::Vector3d;
using Tet = std::array<int, 4>;
using FaceKey = std::array<int, 3>;  // vertex ids, ascending
using EdgeKey = std::array<int, 2>;  // vertex ids, ascending

FaceKey make_face(int a, int b, int c);
EdgeKey make_edge(int a, int b);

struct TetMesh {
  int n_vertices = 0;
  std::vector<Tet> tets;
  std::optional<std::vector<Vec3>> coords;
};

// Derived incidence structure of a tetrahedral mesh. Faces and edges are
// keyed by sorted vertex tuples; orientation lives in oriented_tets, whose
// interior faces receive opposite induced orientations from their two tets.
struct Complex {
  TetMesh mesh;
  std::map<FaceKey, std::vector<int>> face_tets;
  std::map<EdgeKey, std::vector<int>> edge_tets;
  std::set<FaceKey> boundary_faces;
  std::set<int> boundary_vertices;
  std::vector<Tet> oriented_tets;
  std::vector<std::vector<int>> vertex_tets;

  int n_vertices() const { return mesh.n_vertices; }
  int n_tets() const { return static_cast<int>(mesh.tets.size()); }
  int n_faces() const { return static_cast<int>(face_tets.size()); }
  int n_edges() const { return static_cast<int>(edge_tets.size()); }
  bool is_boundary_vertex(int v) const { return boundary_vertices.count(v) > 0; }
  std::vector<int> interior_vertices() const;
  // The tet vertex not on the given face; the face must belong to the tet.
  int opposite_vertex(int tet_id, const FaceKey& face) const;
};

// Builds all incidence maps, classifies the boundary and fixes a consistent
// tet orientation (positive seed volume when coordinates are present).
// Throws Error on FaceOverShared, NonManifoldEdge, NonOrientable,
// DisconnectedDual or TetMesh invariant violations.
Complex build_complex(const TetMesh& mesh);

struct EulerCheck {
  int chi_complex = 0;   // V - E + F - T
  int chi_boundary = 0;  // V_b - E_b + F_b
  bool complex_connected = false;
  bool boundary_connected = false;
  bool is_ball_candidate = false;  // necessary conditions only
};

EulerCheck euler_check(const Complex& complex);

// Link of a vertex: the boundary of its star. Closed (a triangulated
// sphere) exactly when the vertex is interior.
struct LinkGraph {
  int center = -1;
  bool is_closed = false;
  std::vector<int> vertices;           // global ids, ascending
  std::vector<EdgeKey> edges;          // global id pairs
  std::vector<FaceKey> faces;          // global id triples
  Graph graph;                         // on local indices into `vertices`
  int local_index(int global_id) const;
  int euler_characteristic() const;
};

LinkGraph vertex_link(const Complex& complex, int v);

// The graph induced by the vertices and edges of the mesh.
Graph mesh_graph(const Complex& complex);

// Boundary triangles with the orientation induced by oriented_tets. For a
// geometrically positive realization these are outward oriented.
std::vector<std::array<int, 3>> oriented_boundary_triangles(const Complex& complex);

// The four boundary faces of an oriented tet, each with induced orientation.
std::array<std::array<int, 3>, 4> induced_faces(const Tet& tet);

double bbox_diagonal(const std::vector<Vec3>& coords);

}  // namespace tuttet
