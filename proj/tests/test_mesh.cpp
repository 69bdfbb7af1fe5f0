#include <doctest.h>

#include <random>

#include <Eigen/Geometry>

#include "oracles.hpp"
#include "tuttet/generators.hpp"
#include "tuttet/mesh.hpp"

using namespace tuttet;

namespace {

TetMesh single_tet() {
  TetMesh m;
  m.n_vertices = 4;
  m.tets = {{0, 1, 2, 3}};
  m.coords = {{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)}};
  return m;
}

}  // namespace

TEST_CASE("single tet incidence") {
  const Complex c = build_complex(single_tet());
  CHECK(c.n_faces() == 4);
  CHECK(c.boundary_faces.size() == 4);
  CHECK(c.n_edges() == 6);
  CHECK(c.interior_vertices().empty());
  const EulerCheck e = euler_check(c);
  CHECK(e.chi_complex == 1);
  CHECK(e.chi_boundary == 2);
  CHECK(e.is_ball_candidate);
}

TEST_CASE("split tet incidence") {
  const Complex c = build_complex(gen_split_tet());
  CHECK(c.boundary_faces.size() == 4);
  CHECK(c.n_faces() - static_cast<int>(c.boundary_faces.size()) == 6);
  CHECK(c.n_edges() == 10);
  CHECK(c.boundary_vertices == std::set<int>{0, 1, 2, 3});
  CHECK(c.interior_vertices() == std::vector<int>{4});
  const EulerCheck e = euler_check(c);
  CHECK(e.chi_complex == 1);
  CHECK(e.chi_boundary == 2);
  CHECK(e.is_ball_candidate);
}

TEST_CASE("two-interior-vertex mesh incidence") {
  const Complex c = build_complex(gen_floater());
  CHECK(c.boundary_faces.size() == 4);
  CHECK(c.n_faces() - static_cast<int>(c.boundary_faces.size()) == 14);
  CHECK(c.n_edges() == 15);
  CHECK(c.interior_vertices() == std::vector<int>{4, 5});
  const EulerCheck e = euler_check(c);
  CHECK(e.chi_complex == 1);
  CHECK(e.chi_boundary == 2);
  CHECK(e.is_ball_candidate);
}

TEST_CASE("face handshake over the corpus") {
  for (const auto& name : generator_names()) {
    const Complex c = build_complex(generate_named(name));
    int interior = c.n_faces() - static_cast<int>(c.boundary_faces.size());
    CHECK(4 * c.n_tets() == 2 * interior + static_cast<int>(c.boundary_faces.size()));
  }
}

TEST_CASE("interior faces get opposite induced orientations") {
  for (const auto& name : {"split-tet", "floater", "cone-octahedron"}) {
    const Complex c = build_complex(generate_named(name));
    std::map<FaceKey, std::vector<std::array<int, 3>>> induced;
    for (const Tet& t : c.oriented_tets)
      for (const auto& tri : induced_faces(t))
        induced[make_face(tri[0], tri[1], tri[2])].push_back(tri);
    for (const auto& [face, tris] : induced) {
      if (tris.size() != 2) continue;
      auto parity = [](const std::array<int, 3>& t) {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j)
            if (t[i] > t[j]) ++inv;
        return inv % 2;
      };
      CHECK(parity(tris[0]) != parity(tris[1]));
    }
  }
}

TEST_CASE("vertex links") {
  const Complex s5 = build_complex(gen_split_tet());
  SUBCASE("interior link is the closed K4 sphere") {
    const LinkGraph link = vertex_link(s5, 4);
    CHECK(link.is_closed);
    CHECK(link.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(link.graph.edge_count() == 6);
    CHECK(link.faces.size() == 4);
    CHECK(link.euler_characteristic() == 2);
  }
  SUBCASE("boundary link is an open disk") {
    const LinkGraph link = vertex_link(s5, 0);
    CHECK_FALSE(link.is_closed);
    CHECK(link.vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(link.faces.size() == 3);  // triangles (1,2,4), (1,3,4), (2,3,4)
    CHECK(link.euler_characteristic() == 1);
  }
  SUBCASE("single tet corner link is one triangle") {
    const LinkGraph link = vertex_link(build_complex(single_tet()), 0);
    CHECK_FALSE(link.is_closed);
    CHECK(link.faces.size() == 1);
    CHECK(link.vertices.size() == 3);
  }
  SUBCASE("closed iff interior, chi 2 interior / 1 boundary") {
    for (const auto& name : generator_names()) {
      const Complex c = build_complex(generate_named(name));
      for (int v = 0; v < c.n_vertices(); ++v) {
        const LinkGraph link = vertex_link(c, v);
        CHECK(link.is_closed == !c.is_boundary_vertex(v));
        CHECK(link.euler_characteristic() == (link.is_closed ? 2 : 1));
      }
    }
  }
}

TEST_CASE("mesh graphs") {
  CHECK(mesh_graph(build_complex(single_tet())).edge_count() == 6);    // K4
  CHECK(mesh_graph(build_complex(gen_split_tet())).edge_count() == 10);  // K5
  const Graph k6 = mesh_graph(build_complex(gen_floater()));
  CHECK(k6.n == 6);
  CHECK(k6.edge_count() == 15);
}

TEST_CASE("mesh graph invariant under tet permutation and vertex reordering") {
  std::mt19937_64 rng(3);
  const TetMesh base = gen_floater();
  const auto reference = mesh_graph(build_complex(base)).edges();
  for (int trial = 0; trial < 10; ++trial) {
    TetMesh shuffled = base;
    std::shuffle(shuffled.tets.begin(), shuffled.tets.end(), rng);
    for (Tet& t : shuffled.tets) std::shuffle(t.begin(), t.end(), rng);
    CHECK(mesh_graph(build_complex(shuffled)).edges() == reference);
  }
}

TEST_CASE("build rejections") {
  SUBCASE("duplicate tet") {
    TetMesh m = single_tet();
    m.tets.push_back({3, 2, 1, 0});
    CHECK_THROWS_WITH_AS(build_complex(m), doctest::Contains("duplicate"), Error);
  }
  SUBCASE("repeated vertex in tet") {
    TetMesh m = single_tet();
    m.tets = {{0, 0, 1, 2}};
    CHECK_THROWS_AS(build_complex(m), Error);
  }
  SUBCASE("unused vertex") {
    TetMesh m = single_tet();
    m.n_vertices = 5;
    m.coords->push_back(Vec3(2, 2, 2));
    CHECK_THROWS_AS(build_complex(m), Error);
  }
  SUBCASE("face shared by three tets") {
    TetMesh m;
    m.n_vertices = 6;
    m.tets = {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}};
    try {
      build_complex(m);
      FAIL("expected FaceOverShared");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::FaceOverShared);
    }
  }
  SUBCASE("two tets glued along a single edge") {
    try {
      build_complex(oracles::edge_glued_mesh());
      FAIL("expected NonManifoldEdge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonManifoldEdge);
    }
  }
  SUBCASE("two tets glued at a single vertex") {
    try {
      build_complex(oracles::vertex_glued_mesh());
      FAIL("expected DisconnectedDual");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DisconnectedDual);
    }
  }
}

TEST_CASE("orientation seed gives positive volumes on embedded input") {
  const Complex c = build_complex(gen_split_tet());
  const auto& x = *c.mesh.coords;
  for (const Tet& t : c.oriented_tets) {
    const double vol6 = (x[t[1]] - x[t[0]]).cross(x[t[2]] - x[t[0]]).dot(x[t[3]] - x[t[0]]);
    CHECK(vol6 > 0.0);
  }
}
