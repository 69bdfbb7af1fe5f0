#pragma once

#include <string>
#include <vector>

#include "tuttet/mesh.hpp"

namespace tuttet {

// Reference meshes. All carry default coordinates with a strictly convex
// boundary; every generator except gen_floater produces a mesh whose
// reference realization is embedded.

// One tet split at an interior vertex: 5 vertices, 4 tets, graph K5.
TetMesh gen_split_tet();

// One tet with two connected interior vertices: 6 vertices, 8 tets, graph
// K6. The canonical mesh on which convex-combination realizations can fail.
TetMesh gen_floater();

// Split tet with one sub-tet split again: 6 vertices, 7 tets, graph K6
// minus an edge.
TetMesh gen_split_tet_twice();

// Cone from an interior vertex over a triangular bipyramid boundary:
// 6 vertices, 6 tets.
TetMesh gen_cone_bipyramid3();

// Cone over the octahedron: 7 vertices, 8 tets.
TetMesh gen_cone_octahedron();

// Cone over a pentagonal bipyramid: 8 vertices, 10 tets.
TetMesh gen_cone_bipyramid5();

// Column of `levels` tets glued along sliding-window faces, each split at an
// interior vertex. No coordinates; used as a graph corpus member.
TetMesh gen_stacked_split_tets(int levels);

// Generator registry for the CLI: name -> mesh.
std::vector<std::string> generator_names();
TetMesh generate_named(const std::string& name);

}  // namespace tuttet
