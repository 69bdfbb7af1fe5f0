#include "tuttet/embed.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "tuttet/rng.hpp"

namespace tuttet {

namespace {

std::vector<Vec3> boundary_coord_list(const std::map<int, Vec3>& coords) {
  std::vector<Vec3> out;
  out.reserve(coords.size());
  for (const auto& [v, p] : coords) out.push_back(p);
  return out;
}

double boundary_volume6(const Complex& c, const std::vector<Vec3>& x) {
  double vol6 = 0.0;
  for (const auto& tri : oriented_boundary_triangles(c))
    vol6 += x[tri[0]].dot(x[tri[1]].cross(x[tri[2]]));
  return vol6;
}

}  // namespace

ConvexityCheck check_strict_convexity(const Complex& complex, const std::map<int, Vec3>& boundary_coords,
                                      const Tolerances& tol) {
  ConvexityCheck result;
  for (int v : complex.boundary_vertices)
    if (!boundary_coords.count(v)) {
      result.detail = "missing coordinates for boundary vertex " + std::to_string(v);
      return result;
    }

  const double diag = bbox_diagonal(boundary_coord_list(boundary_coords));
  const double margin = tol.eps_geometric * diag;

  bool ok = true;
  for (const FaceKey& face : complex.boundary_faces) {
    const Vec3& a = boundary_coords.at(face[0]);
    const Vec3& b = boundary_coords.at(face[1]);
    const Vec3& c = boundary_coords.at(face[2]);
    Vec3 normal = (b - a).cross(c - a);
    const double area2 = normal.norm();
    if (area2 <= tol.eps_geometric * diag * diag) {
      result.degenerate_faces.push_back(face);
      ok = false;
      continue;
    }
    normal /= area2;
    // All other boundary vertices strictly on one common side.
    int side = 0;
    for (const auto& [v, p] : boundary_coords) {
      if (v == face[0] || v == face[1] || v == face[2]) continue;
      const double d = normal.dot(p - a);
      int s = d > margin ? 1 : (d < -margin ? -1 : 0);
      if (s == 0 || (side != 0 && s != side)) {
        result.violations.push_back(face);
        ok = false;
        break;
      }
      side = s;
    }
  }
  result.pass = ok;
  if (!ok) {
    std::ostringstream os;
    os << result.violations.size() << " face(s) with non-strict vertices, "
       << result.degenerate_faces.size() << " degenerate face(s)";
    result.detail = os.str();
  }
  return result;
}

BoundaryPlacement place_boundary(const Complex& complex, BoundaryStrategy strategy,
                                 const std::vector<Vec3>& input_coords, const Tolerances& tol) {
  if (static_cast<int>(input_coords.size()) != complex.n_vertices())
    throw Error(ErrorCode::InconsistentCounts, "coordinate count does not match vertex count");

  BoundaryPlacement placement;
  placement.strategy = strategy;

  if (strategy == BoundaryStrategy::AsGiven) {
    for (int v : complex.boundary_vertices) placement.coords[v] = input_coords[v];
  } else {
    Vec3 center = Vec3::Zero();
    for (int v : complex.boundary_vertices) center += input_coords[v];
    center /= static_cast<double>(complex.boundary_vertices.size());

    std::vector<std::pair<int, Vec3>> dirs;
    for (int v : complex.boundary_vertices) {
      Vec3 d = input_coords[v] - center;
      const double len = d.norm();
      if (len == 0.0)
        throw Error(ErrorCode::ProjectionCollision,
                    "boundary vertex " + std::to_string(v) + " coincides with the centroid");
      dirs.emplace_back(v, d / len);
    }
    for (size_t i = 0; i < dirs.size(); ++i)
      for (size_t j = i + 1; j < dirs.size(); ++j) {
        const double cosang = std::clamp(dirs[i].second.dot(dirs[j].second), -1.0, 1.0);
        if (std::acos(cosang) < 1e-9)
          throw Error(ErrorCode::ProjectionCollision,
                      "boundary vertices " + std::to_string(dirs[i].first) + " and " +
                          std::to_string(dirs[j].first) + " project to the same direction");
      }
    for (const auto& [v, d] : dirs) placement.coords[v] = center + d;
  }

  ConvexityCheck check = check_strict_convexity(complex, placement.coords, tol);
  if (!check.pass) {
    if (!check.degenerate_faces.empty() && strategy == BoundaryStrategy::AsGiven)
      throw Error(ErrorCode::DegenerateFace, "boundary has zero-area faces: " + check.detail);
    throw Error(strategy == BoundaryStrategy::AsGiven ? ErrorCode::NotConvex
                                                      : ErrorCode::NotConvexAfterProjection,
                "boundary is not strictly convex: " + check.detail);
  }
  return placement;
}

WeightMatrix assemble_weights(const Complex& complex, const WeightScheme& scheme,
                              const Tolerances& tol) {
  const Graph graph = mesh_graph(complex);
  WeightMatrix weights;

  for (int v : complex.interior_vertices()) {
    const std::vector<int> neighbors(graph.adj[v].begin(), graph.adj[v].end());
    const int deg = static_cast<int>(neighbors.size());
    std::vector<double> row(deg);

    switch (scheme.kind) {
      case WeightScheme::Kind::Uniform:
        std::fill(row.begin(), row.end(), 1.0 / deg);
        break;
      case WeightScheme::Kind::Dirichlet: {
        Rng rng(mix_seed(scheme.seed, static_cast<std::uint64_t>(v)));
        do {
          row = rng.dirichlet(scheme.alpha, deg);
        } while (*std::min_element(row.begin(), row.end()) < tol.min_weight);
        break;
      }
      case WeightScheme::Kind::User: {
        auto it = scheme.user_rows.find(v);
        if (it == scheme.user_rows.end())
          throw Error(ErrorCode::BadUserWeights, "missing row for interior vertex " + std::to_string(v));
        std::map<int, double> given(it->second.begin(), it->second.end());
        if (static_cast<int>(given.size()) != deg)
          throw Error(ErrorCode::BadUserWeights, "row support mismatch at vertex " + std::to_string(v));
        double sum = 0.0;
        for (int i = 0; i < deg; ++i) {
          auto entry = given.find(neighbors[i]);
          if (entry == given.end())
            throw Error(ErrorCode::BadUserWeights, "row support mismatch at vertex " + std::to_string(v));
          if (entry->second < tol.min_weight)
            throw Error(ErrorCode::BadUserWeights, "non-positive weight at vertex " + std::to_string(v));
          row[i] = entry->second;
          sum += entry->second;
        }
        if (std::abs(sum - 1.0) > 1e-9)
          throw Error(ErrorCode::BadUserWeights, "row sum differs from 1 at vertex " + std::to_string(v));
        for (double& w : row) w /= sum;  // renormalize exactly
        break;
      }
    }

    auto& out = weights.rows[v];
    out.reserve(deg);
    for (int i = 0; i < deg; ++i) out.emplace_back(neighbors[i], row[i]);
  }
  return weights;
}

namespace {

struct InteriorIndex {
  std::vector<int> vertices;       // interior vertex ids
  std::vector<int> index_of;       // vertex id -> row or -1
};

InteriorIndex index_interior(const Complex& c) {
  InteriorIndex idx;
  idx.vertices = c.interior_vertices();
  idx.index_of.assign(c.n_vertices(), -1);
  for (size_t i = 0; i < idx.vertices.size(); ++i) idx.index_of[idx.vertices[i]] = static_cast<int>(i);
  return idx;
}

// Per-axis right-hand side: contributions of boundary neighbors.
Eigen::MatrixXd assemble_rhs(const InteriorIndex& idx, const WeightMatrix& weights,
                             const BoundaryPlacement& placement) {
  const int m = static_cast<int>(idx.vertices.size());
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(m, 3);
  for (int i = 0; i < m; ++i)
    for (const auto& [w, b] : weights.rows.at(idx.vertices[i]))
      if (idx.index_of[w] < 0) rhs.row(i) += b * placement.coords.at(w).transpose();
  return rhs;
}

Eigen::MatrixXd solve_dense(const InteriorIndex& idx, const WeightMatrix& weights,
                            const Eigen::MatrixXd& rhs) {
  const int m = static_cast<int>(idx.vertices.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(m, m);
  for (int i = 0; i < m; ++i)
    for (const auto& [w, b] : weights.rows.at(idx.vertices[i]))
      if (int j = idx.index_of[w]; j >= 0) a(i, j) -= b;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (min_pivot <= 1e-14)
    throw Error(ErrorCode::SingularSystem, "pivot magnitude " + std::to_string(min_pivot));
  return lu.solve(rhs);
}

Eigen::MatrixXd solve_gauss_seidel(const InteriorIndex& idx, const WeightMatrix& weights,
                                   const Eigen::MatrixXd& rhs, double scale,
                                   const SolveOptions& options) {
  const int m = static_cast<int>(idx.vertices.size());
  Eigen::MatrixXd x = rhs;  // start from the boundary contribution
  for (long sweep = 0; sweep < options.gs_max_sweeps; ++sweep) {
    double max_residual = 0.0;
    for (int i = 0; i < m; ++i) {
      Eigen::RowVector3d value = rhs.row(i);
      for (const auto& [w, b] : weights.rows.at(idx.vertices[i]))
        if (int j = idx.index_of[w]; j >= 0) value += b * x.row(j);
      max_residual = std::max(max_residual, (value - x.row(i)).cwiseAbs().maxCoeff());
      x.row(i) = value;
    }
    if (max_residual <= options.gs_tolerance * scale) break;
  }
  return x;
}

}  // namespace

RealizedMesh solve_positions(const Complex& complex, const WeightMatrix& weights,
                             const BoundaryPlacement& placement, const Tolerances& tol,
                             const SolveOptions& options) {
  RealizedMesh realized;
  realized.complex = complex;
  realized.coords.assign(complex.n_vertices(), Vec3::Zero());
  for (const auto& [v, p] : placement.coords) realized.coords[v] = p;

  const InteriorIndex idx = index_interior(complex);
  const int m = static_cast<int>(idx.vertices.size());

  double scale = 0.0;
  for (const auto& [v, p] : placement.coords) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  if (scale == 0.0) scale = 1.0;

  if (m == 0) {
    realized.vacuous = true;
  } else {
    for (int v : idx.vertices)
      if (!weights.rows.count(v))
        throw Error(ErrorCode::BadUserWeights, "weight matrix misses interior vertex " + std::to_string(v));

    const Eigen::MatrixXd rhs = assemble_rhs(idx, weights, placement);
    const Eigen::MatrixXd solution = m <= options.dense_limit
                                         ? solve_dense(idx, weights, rhs)
                                         : solve_gauss_seidel(idx, weights, rhs, scale, options);
    for (int i = 0; i < m; ++i) realized.coords[idx.vertices[i]] = solution.row(i).transpose();

    // Residual of the convex-combination equations, max-norm relative to the
    // boundary coordinate scale.
    double residual = 0.0;
    for (int i = 0; i < m; ++i) {
      Vec3 combo = Vec3::Zero();
      for (const auto& [w, b] : weights.rows.at(idx.vertices[i])) combo += b * realized.coords[w];
      residual = std::max(residual, (combo - realized.coords[idx.vertices[i]]).cwiseAbs().maxCoeff());
    }
    realized.residual = residual / scale;
    if (realized.residual > tol.solve_residual)
      throw Error(ErrorCode::SingularSystem,
                  "solve residual " + std::to_string(realized.residual) + " exceeds tolerance");

    // Strictness of Eq-style combinations: with positive weights the solved
    // point is strictly inside its neighbors' hull iff the centered neighbor
    // matrix has full rank.
    const double diag = bbox_diagonal(realized.coords);
    for (int v : idx.vertices) {
      const auto& row = weights.rows.at(v);
      Eigen::MatrixXd centered(3, row.size());
      for (size_t k = 0; k < row.size(); ++k)
        centered.col(static_cast<int>(k)) = realized.coords[row[k].first] - realized.coords[v];
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
      if (svd.singularValues().minCoeff() <= 1e-12 * diag) realized.eq1_strict_ok = false;
    }
  }

  // Normalize the global flip so the boundary surface encloses positive
  // volume under the induced orientation.
  if (boundary_volume6(realized.complex, realized.coords) < 0.0)
    for (Tet& t : realized.complex.oriented_tets) std::swap(t[2], t[3]);
  return realized;
}

RealizedMesh realize_as_given(const Complex& complex) {
  if (!complex.mesh.coords)
    throw Error(ErrorCode::InvalidMesh, "mesh carries no coordinates to verify");
  RealizedMesh realized;
  realized.complex = complex;
  realized.coords = *complex.mesh.coords;
  realized.vacuous = complex.interior_vertices().empty();
  if (boundary_volume6(realized.complex, realized.coords) < 0.0)
    for (Tet& t : realized.complex.oriented_tets) std::swap(t[2], t[3]);
  return realized;
}

}  // namespace tuttet
