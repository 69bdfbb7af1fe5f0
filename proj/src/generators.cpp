#include "tuttet/generators.hpp"

#include <cmath>
#include <numbers>

#include "tuttet/types.hpp"

namespace tuttet {

TetMesh gen_split_tet() {
  TetMesh m;
  m.n_vertices = 5;
  m.tets = {{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}};
  m.coords = {{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1), Vec3(0.25, 0.25, 0.25)}};
  return m;
}

TetMesh gen_floater() {
  // Two interior vertices joined to each other and to all four corners.
  // The interior segment runs along the common perpendicular of the two
  // boundary edges it is ringed by, which keeps the reference embedded.
  TetMesh m;
  m.n_vertices = 6;
  const int a = 0, b = 1, c = 2, d = 3, u = 4, v = 5;
  m.tets = {{u, v, a, b}, {u, v, b, c}, {u, v, c, d}, {u, v, d, a},
            {u, a, b, c}, {u, a, c, d}, {v, a, b, d}, {v, b, c, d}};
  m.coords = {{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 0, 1), Vec3(0, 1, 0),
               Vec3(0.15, 0.15, 0.35), Vec3(0.35, 0.35, 0.15)}};
  return m;
}

TetMesh gen_split_tet_twice() {
  TetMesh m;
  m.n_vertices = 6;
  m.tets = {{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4},
            {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}};
  m.coords = {{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1), Vec3(0.2, 0.2, 0.2),
               Vec3(0.3, 0.3, 0.3)}};
  return m;
}

TetMesh gen_cone_bipyramid3() {
  TetMesh m;
  m.n_vertices = 6;
  const int top = 3, bottom = 4, center = 5;
  for (int k = 0; k < 3; ++k) {
    m.tets.push_back({center, top, k, (k + 1) % 3});
    m.tets.push_back({center, bottom, k, (k + 1) % 3});
  }
  const double s = std::sqrt(3.0) / 2.0;
  m.coords = {{Vec3(1, 0, 0), Vec3(-0.5, s, 0), Vec3(-0.5, -s, 0), Vec3(0, 0, 1), Vec3(0, 0, -1),
               Vec3(0, 0, 0)}};
  return m;
}

TetMesh gen_cone_octahedron() {
  TetMesh m;
  m.n_vertices = 7;
  const int center = 6;
  for (int sx : {0, 1})
    for (int sy : {2, 3})
      for (int sz : {4, 5}) m.tets.push_back({center, sx, sy, sz});
  m.coords = {{Vec3(1, 0, 0), Vec3(-1, 0, 0), Vec3(0, 1, 0), Vec3(0, -1, 0), Vec3(0, 0, 1),
               Vec3(0, 0, -1), Vec3(0, 0, 0)}};
  return m;
}

TetMesh gen_cone_bipyramid5() {
  TetMesh m;
  m.n_vertices = 8;
  const int top = 5, bottom = 6, center = 7;
  std::vector<Vec3> coords;
  for (int k = 0; k < 5; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 5.0;
    coords.emplace_back(std::cos(t), std::sin(t), 0.0);
    m.tets.push_back({center, top, k, (k + 1) % 5});
    m.tets.push_back({center, bottom, k, (k + 1) % 5});
  }
  coords.emplace_back(0, 0, 1);
  coords.emplace_back(0, 0, -1);
  coords.emplace_back(0, 0, 0);
  m.coords = coords;
  return m;
}

TetMesh gen_stacked_split_tets(int levels) {
  if (levels < 1) throw Error(ErrorCode::InvalidMesh, "need at least one level");
  TetMesh m;
  m.n_vertices = levels + 3 + levels;
  for (int i = 0; i < levels; ++i) {
    const int u = levels + 3 + i;
    const std::array<int, 4> w{i, i + 1, i + 2, i + 3};
    m.tets.push_back({w[0], w[1], w[2], u});
    m.tets.push_back({w[0], w[1], w[3], u});
    m.tets.push_back({w[0], w[2], w[3], u});
    m.tets.push_back({w[1], w[2], w[3], u});
  }
  return m;
}

std::vector<std::string> generator_names() {
  return {"split-tet",       "floater",         "split-tet-twice", "cone-bipyramid3",
          "cone-octahedron", "cone-bipyramid5", "stacked-split-3"};
}

TetMesh generate_named(const std::string& name) {
  if (name == "split-tet") return gen_split_tet();
  if (name == "floater") return gen_floater();
  if (name == "split-tet-twice") return gen_split_tet_twice();
  if (name == "cone-bipyramid3") return gen_cone_bipyramid3();
  if (name == "cone-octahedron") return gen_cone_octahedron();
  if (name == "cone-bipyramid5") return gen_cone_bipyramid5();
  if (name == "stacked-split-3") return gen_stacked_split_tets(3);
  throw Error(ErrorCode::InvalidMesh, "unknown generator '" + name + "'");
}

}  // namespace tuttet
