#include "tuttet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "tuttet/rng.hpp"

namespace tuttet {

double signed_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return (b - a).cross(c - a).dot(d - a) / 6.0;
}

double tet_signed_volume(const RealizedMesh& r, int tet_id) {
  const Tet& t = r.complex.oriented_tets[tet_id];
  return signed_volume(r.coords[t[0]], r.coords[t[1]], r.coords[t[2]], r.coords[t[3]]);
}

OrientationCheck check_orientation(const RealizedMesh& realized, const Tolerances& tol) {
  OrientationCheck result;
  const double diag = bbox_diagonal(realized.coords);
  const double eps_vol = tol.eps_volume * diag * diag * diag;

  result.min_signed_volume = std::numeric_limits<double>::infinity();
  for (int ti = 0; ti < realized.complex.n_tets(); ++ti) {
    const double v = tet_signed_volume(realized, ti);
    result.min_signed_volume = std::min(result.min_signed_volume, v);
    if (v <= eps_vol) result.witnesses.push_back(ti);
  }
  result.all_positive = result.witnesses.empty();
  return result;
}

FaceSideCheck check_interior_face_sides(const RealizedMesh& realized, const Tolerances& tol) {
  FaceSideCheck result;
  const Complex& c = realized.complex;
  const double diag = bbox_diagonal(realized.coords);
  const double margin = tol.eps_geometric * diag;

  result.pass = true;
  for (const auto& [face, tets] : c.face_tets) {
    if (tets.size() != 2) continue;
    const Vec3& a = realized.coords[face[0]];
    const Vec3& b = realized.coords[face[1]];
    const Vec3& d = realized.coords[face[2]];
    Vec3 normal = (b - a).cross(d - a);
    const double area2 = normal.norm();
    if (area2 <= tol.eps_geometric * diag * diag) {
      result.degenerate_faces.push_back(face);
      result.pass = false;
      continue;
    }
    normal /= area2;
    const double du = normal.dot(realized.coords[c.opposite_vertex(tets[0], face)] - a);
    const double dl = normal.dot(realized.coords[c.opposite_vertex(tets[1], face)] - a);
    if (!(std::abs(du) > margin && std::abs(dl) > margin && du * dl < 0.0)) {
      result.violations.push_back(face);
      result.pass = false;
    }
  }
  return result;
}

StarCheck check_star_nondegeneracy(const RealizedMesh& realized, const Tolerances& tol) {
  StarCheck result;
  const Complex& c = realized.complex;
  const double diag = bbox_diagonal(realized.coords);
  const double eps = tol.eps_geometric * diag;

  result.min_edge_length = std::numeric_limits<double>::infinity();
  for (const auto& [edge, tets] : c.edge_tets) {
    (void)tets;
    const double len = (realized.coords[edge[0]] - realized.coords[edge[1]]).norm();
    result.min_edge_length = std::min(result.min_edge_length, len);
    if (len <= eps) result.short_edges.push_back(edge);
  }

  const Graph graph = mesh_graph(c);
  for (int v : c.interior_vertices()) {
    Eigen::MatrixXd centered(3, graph.degree(v));
    int k = 0;
    for (int w : graph.adj[v]) centered.col(k++) = realized.coords[w] - realized.coords[v];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
    if (svd.singularValues().minCoeff() <= eps) result.flat_stars.push_back(v);
  }
  result.pass = result.flat_stars.empty() && result.short_edges.empty();
  return result;
}

namespace {

std::array<double, 4> barycentric(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c,
                                  const Vec3& d) {
  const double vol = signed_volume(a, b, c, d);
  return {signed_volume(p, b, c, d) / vol, signed_volume(a, p, c, d) / vol,
          signed_volume(a, b, p, d) / vol, signed_volume(a, b, c, p) / vol};
}

// A sample is ambiguous when it sits inside some eps-inflated tet without
// being eps-strictly inside it: the strict containment decision for that tet
// could flip under perturbation. Points merely on the extended plane of a
// distant face are fine.
bool near_any_facet(const RealizedMesh& r, const Vec3& p, double eps_vol, const Tolerances& tol) {
  for (int ti = 0; ti < r.complex.n_tets(); ++ti) {
    if (std::abs(tet_signed_volume(r, ti)) <= eps_vol) continue;
    const Tet& t = r.complex.oriented_tets[ti];
    const auto bary = barycentric(p, r.coords[t[0]], r.coords[t[1]], r.coords[t[2]], r.coords[t[3]]);
    const double lowest = *std::min_element(bary.begin(), bary.end());
    if (lowest >= -tol.eps_geometric && lowest <= 2.0 * tol.eps_geometric) return true;
  }
  return false;
}

// Strict interior of the boundary polyhedron, assuming convexity: p on the
// centroid side of every boundary face plane with margin.
bool strictly_inside_boundary(const RealizedMesh& r, const Vec3& p, const Vec3& centroid,
                              double margin) {
  for (const FaceKey& face : r.complex.boundary_faces) {
    const Vec3& a = r.coords[face[0]];
    Vec3 normal = (r.coords[face[1]] - a).cross(r.coords[face[2]] - a);
    const double len = normal.norm();
    if (len == 0.0) return false;
    normal /= len;
    const double dc = normal.dot(centroid - a);
    const double dp = normal.dot(p - a);
    if (dc >= 0.0 ? dp <= margin : dp >= -margin) return false;
  }
  return true;
}

}  // namespace

int count_containing_tets(const RealizedMesh& realized, const Vec3& p, const Tolerances& tol) {
  const double diag = bbox_diagonal(realized.coords);
  const double eps_vol = tol.eps_volume * diag * diag * diag;
  int count = 0;
  for (int ti = 0; ti < realized.complex.n_tets(); ++ti) {
    const Tet& t = realized.complex.oriented_tets[ti];
    if (std::abs(tet_signed_volume(realized, ti)) <= eps_vol) continue;
    const auto bary =
        barycentric(p, realized.coords[t[0]], realized.coords[t[1]], realized.coords[t[2]],
                    realized.coords[t[3]]);
    if (*std::min_element(bary.begin(), bary.end()) > tol.eps_geometric) ++count;
  }
  return count;
}

ContainmentCheck containment_certificate(const RealizedMesh& realized, const ContainmentSpec& spec,
                                         const Tolerances& tol) {
  ContainmentCheck result;
  const double diag = bbox_diagonal(realized.coords);
  const double margin = tol.eps_geometric * diag;

  std::vector<Vec3> samples;

  // Barycenters of non-degenerate tets; skip any that sit near a facet.
  const double eps_vol = tol.eps_volume * diag * diag * diag;
  for (int ti = 0; ti < realized.complex.n_tets(); ++ti) {
    if (std::abs(tet_signed_volume(realized, ti)) <= eps_vol) continue;
    const Tet& t = realized.complex.oriented_tets[ti];
    const Vec3 barycenter =
        (realized.coords[t[0]] + realized.coords[t[1]] + realized.coords[t[2]] + realized.coords[t[3]]) / 4.0;
    if (near_any_facet(realized, barycenter, eps_vol, tol)) {
      ++result.near_face_rejections;
      continue;
    }
    samples.push_back(barycenter);
  }

  // Seeded rejection sampling strictly inside the boundary polyhedron.
  Vec3 lo = realized.coords.front(), hi = realized.coords.front(), centroid = Vec3::Zero();
  for (int v : realized.complex.boundary_vertices) centroid += realized.coords[v];
  centroid /= static_cast<double>(realized.complex.boundary_vertices.size());
  for (const Vec3& p : realized.coords) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  Rng rng(spec.seed);
  long attempts = 0;
  const long max_attempts = 200L * std::max(spec.n_samples, 1) + 1000;
  int accepted = 0;
  while (accepted < spec.n_samples && attempts < max_attempts) {
    ++attempts;
    Vec3 p(lo.x() + rng.uniform() * (hi.x() - lo.x()), lo.y() + rng.uniform() * (hi.y() - lo.y()),
           lo.z() + rng.uniform() * (hi.z() - lo.z()));
    if (!strictly_inside_boundary(realized, p, centroid, margin)) continue;
    if (near_any_facet(realized, p, eps_vol, tol)) {
      ++result.near_face_rejections;
      continue;
    }
    samples.push_back(p);
    ++accepted;
  }

  result.ok = true;
  for (const Vec3& p : samples) {
    ++result.samples_checked;
    if (count_containing_tets(realized, p, tol) != 1) {
      result.ok = false;
      result.bad_samples.push_back(p);
    }
  }
  return result;
}

double volume_identity(const RealizedMesh& realized) {
  double tet_total = 0.0;
  for (int ti = 0; ti < realized.complex.n_tets(); ++ti) tet_total += tet_signed_volume(realized, ti);

  double boundary_vol6 = 0.0;
  for (const auto& tri : oriented_boundary_triangles(realized.complex))
    boundary_vol6 += realized.coords[tri[0]].dot(realized.coords[tri[1]].cross(realized.coords[tri[2]]));
  const double boundary_vol = boundary_vol6 / 6.0;
  if (boundary_vol == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(tet_total - boundary_vol) / std::abs(boundary_vol);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Embedded: return "embedded";
    case Verdict::Degenerate: return "degenerate";
    case Verdict::Flipped: return "flipped";
    case Verdict::Overlapping: return "overlapping";
  }
  return "degenerate";
}

EmbeddingCertificate certify(const RealizedMesh& realized, const CertifyOptions& options) {
  EmbeddingCertificate cert;
  const Tolerances& tol = options.tol;
  const double diag = bbox_diagonal(realized.coords);
  const double eps_vol = tol.eps_volume * diag * diag * diag;

  const OrientationCheck orientation = check_orientation(realized, tol);
  cert.all_positive = orientation.all_positive;
  cert.min_signed_volume = orientation.min_signed_volume;

  const StarCheck stars = check_star_nondegeneracy(realized, tol);
  cert.star_rank_ok = stars.pass;
  cert.min_edge_length = stars.min_edge_length;

  const FaceSideCheck faces = check_interior_face_sides(realized, tol);
  cert.face_condition_ok = faces.pass;

  bool has_zero_measure = !stars.pass || !faces.degenerate_faces.empty();
  for (int ti = 0; ti < realized.complex.n_tets(); ++ti)
    if (std::abs(tet_signed_volume(realized, ti)) <= eps_vol) has_zero_measure = true;

  if (cert.all_positive) {
    const ContainmentCheck containment =
        containment_certificate(realized, options.containment, tol);
    cert.containment_ok = containment.ok;
    cert.samples_checked = containment.samples_checked;
    cert.volume_identity_gap = volume_identity(realized);
  }

  if (has_zero_measure) {
    cert.verdict = Verdict::Degenerate;
  } else if (!cert.all_positive) {
    cert.verdict = Verdict::Flipped;
  } else if (!cert.containment_ok || !cert.face_condition_ok ||
             !(cert.volume_identity_gap && *cert.volume_identity_gap <= tol.volume_gap)) {
    cert.verdict = Verdict::Overlapping;
  } else {
    cert.verdict = Verdict::Embedded;
  }
  return cert;
}

}  // namespace tuttet
