#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tuttet/mesh.hpp"
#include "tuttet/types.hpp"

namespace tuttet {

// Row-stochastic positive weights, one row per interior vertex over exactly
// its graph neighbors.
struct WeightMatrix {
  std::map<int, std::vector<std::pair<int, double>>> rows;
};

enum class BoundaryStrategy { AsGiven, SphereNormalize };

struct BoundaryPlacement {
  BoundaryStrategy strategy = BoundaryStrategy::AsGiven;
  std::map<int, Vec3> coords;  // boundary vertex -> position
};

struct ConvexityCheck {
  bool pass = false;
  std::vector<FaceKey> violations;        // faces with a non-strict vertex
  std::vector<FaceKey> degenerate_faces;  // zero-area faces
  std::string detail;
};

// Strict convexity of the realized boundary: every boundary face's
// supporting plane must have all other boundary vertices strictly on one
// side, with margin eps_geometric * bbox diagonal.
ConvexityCheck check_strict_convexity(const Complex& complex, const std::map<int, Vec3>& boundary_coords,
                                      const Tolerances& tol = {});

// Realizes the boundary, either verbatim or radially projected onto the
// unit sphere around the boundary centroid. Throws NotConvex /
// DegenerateFace / ProjectionCollision / NotConvexAfterProjection.
BoundaryPlacement place_boundary(const Complex& complex, BoundaryStrategy strategy,
                                 const std::vector<Vec3>& input_coords, const Tolerances& tol = {});

struct WeightScheme {
  enum class Kind { Uniform, Dirichlet, User } kind = Kind::Uniform;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  std::map<int, std::vector<std::pair<int, double>>> user_rows;

  static WeightScheme uniform() { return {}; }
  static WeightScheme dirichlet(double alpha, std::uint64_t seed) {
    WeightScheme s;
    s.kind = Kind::Dirichlet;
    s.alpha = alpha;
    s.seed = seed;
    return s;
  }
  static WeightScheme user(std::map<int, std::vector<std::pair<int, double>>> rows) {
    WeightScheme s;
    s.kind = Kind::User;
    s.user_rows = std::move(rows);
    return s;
  }
};

// Dirichlet rows are sampled per vertex from a stream seeded by
// mix_seed(seed, vertex id) and resampled while any entry falls below
// tol.min_weight; user rows outside tolerance raise BadUserWeights.
WeightMatrix assemble_weights(const Complex& complex, const WeightScheme& scheme,
                              const Tolerances& tol = {});

struct RealizedMesh {
  Complex complex;  // orientation normalized so the boundary encloses positive volume
  std::vector<Vec3> coords;
  double residual = 0.0;  // max-norm solve residual relative to the boundary scale
  bool vacuous = false;   // no interior vertices, nothing was solved
  bool eq1_strict_ok = true;  // each interior vertex strictly inside its neighbors' hull
};

struct SolveOptions {
  int dense_limit = 2000;       // direct LU up to this many interior vertices
  double gs_tolerance = 1e-12;  // Gauss-Seidel residual target
  long gs_max_sweeps = 1'000'000;
};

// Solves (I - B_II) X_I = B_IB X_B per coordinate axis and returns the full
// realization. Throws SingularSystem if a pivot collapses or the residual
// exceeds tol.solve_residual.
RealizedMesh solve_positions(const Complex& complex, const WeightMatrix& weights,
                             const BoundaryPlacement& placement, const Tolerances& tol = {},
                             const SolveOptions& options = {});

// Wraps a mesh that already carries coordinates for verification.
RealizedMesh realize_as_given(const Complex& complex);

}  // namespace tuttet
