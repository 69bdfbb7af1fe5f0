#pragma once

// Independent oracles used to cross-check the library: deliberately naive
// implementations kept apart from the production code paths.

#include <vector>

#include "tuttet/embed.hpp"
#include "tuttet/graph.hpp"
#include "tuttet/mesh.hpp"

namespace oracles {

// kappa(g) >= k by exhaustive removal of every vertex subset of size < k.
bool brute_force_k_connected(const tuttet::Graph& g, int k);

// True when removing `cut` disconnects the graph.
bool cut_separates(const tuttet::Graph& g, const std::vector<int>& cut);

// Minor containment by recursion over single edge deletions / contractions
// and vertex deletions, memoized on the labeled graph. Exact; intended for
// hosts with at most ~9 vertices.
bool brute_force_has_minor(const tuttet::Graph& host, const tuttet::Graph& pattern);

// Number of tets strictly containing p, with barycentric coordinates from a
// 3x3 linear solve instead of determinant ratios.
int brute_force_containing_tets(const tuttet::RealizedMesh& realized, const tuttet::Vec3& p,
                                double eps_bary = 1e-9);

// Shared fixtures.
tuttet::TetMesh two_tet_mesh();                  // shared interior face on boundary vertices
tuttet::TetMesh ear_mesh();                      // split tet with an ear glued to one face
tuttet::TetMesh edge_glued_mesh();               // two tets sharing exactly one edge
tuttet::TetMesh vertex_glued_mesh();             // two tets sharing exactly one vertex
tuttet::Graph bipyramid_graph();                 // triangle + two apexes, no apex-apex edge

}  // namespace oracles
