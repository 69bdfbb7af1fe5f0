#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tuttet/embed.hpp"
#include "tuttet/mesh.hpp"

namespace tuttet {

// det[(b-a),(c-a),(d-a)] / 6.
double signed_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

double tet_signed_volume(const RealizedMesh& realized, int tet_id);

struct OrientationCheck {
  bool all_positive = false;
  double min_signed_volume = 0.0;
  std::vector<int> witnesses;  // tets at or below the volume threshold
};

OrientationCheck check_orientation(const RealizedMesh& realized, const Tolerances& tol = {});

struct FaceSideCheck {
  bool pass = false;
  std::vector<FaceKey> violations;        // opposite vertices not strictly on opposite sides
  std::vector<FaceKey> degenerate_faces;  // face plane below area tolerance
};

// For every interior face, the two opposite tet vertices must lie strictly
// on opposite sides of its supporting plane.
FaceSideCheck check_interior_face_sides(const RealizedMesh& realized, const Tolerances& tol = {});

struct StarCheck {
  bool pass = false;
  std::vector<int> flat_stars;      // interior vertices with rank-deficient stars
  double min_edge_length = 0.0;     // over all complex edges
  std::vector<EdgeKey> short_edges;
};

StarCheck check_star_nondegeneracy(const RealizedMesh& realized, const Tolerances& tol = {});

struct ContainmentSpec {
  int n_samples = 1000;
  std::uint64_t seed = 1;
};

struct ContainmentCheck {
  bool ok = false;
  long samples_checked = 0;
  long near_face_rejections = 0;
  std::vector<Vec3> bad_samples;  // contained in != 1 tet
};

// Counts tets strictly containing p (barycentric coordinates all above
// tol.eps_geometric); degenerate tets contain nothing.
int count_containing_tets(const RealizedMesh& realized, const Vec3& p, const Tolerances& tol = {});

// Samples all tet barycenters plus seeded uniform points strictly inside the
// boundary polyhedron and requires each to lie in exactly one tet. Samples
// within tolerance of a face plane are resampled (barycenters: skipped).
ContainmentCheck containment_certificate(const RealizedMesh& realized, const ContainmentSpec& spec = {},
                                         const Tolerances& tol = {});

// Relative gap between the sum of signed tet volumes and the boundary
// polyhedron volume (divergence theorem over oriented boundary triangles).
double volume_identity(const RealizedMesh& realized);

enum class Verdict { Embedded, Degenerate, Flipped, Overlapping };

const char* verdict_name(Verdict v);

struct EmbeddingCertificate {
  bool all_positive = false;
  double min_signed_volume = 0.0;
  bool face_condition_ok = false;
  bool star_rank_ok = false;
  double min_edge_length = 0.0;
  bool containment_ok = false;
  long samples_checked = 0;
  std::optional<double> volume_identity_gap;  // absent when orientation already failed
  Verdict verdict = Verdict::Degenerate;
};

struct CertifyOptions {
  ContainmentSpec containment;
  Tolerances tol;
};

// Runs every check; verdict precedence is degenerate > flipped > overlapping.
EmbeddingCertificate certify(const RealizedMesh& realized, const CertifyOptions& options = {});

}  // namespace tuttet
