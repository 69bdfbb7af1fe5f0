// Acceptance suite: runs every top-level criterion and prints one PASS/FAIL
// line each. Exit code 0 iff all criteria hold.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tuttet/embed.hpp"
#include "tuttet/experiment.hpp"
#include "tuttet/generators.hpp"
#include "tuttet/io.hpp"
#include "tuttet/minors.hpp"
#include "tuttet/rng.hpp"
#include "tuttet/validate.hpp"
#include "tuttet/verify.hpp"

using namespace tuttet;

namespace {

struct Harness {
  int failures = 0;
  std::vector<std::string> notes;

  void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    notes.clear();
    bool ok = false;
    std::string error;
    try {
      ok = body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::printf("[%s] criterion %d: %s", ok ? "PASS" : "FAIL", number, label.c_str());
    for (const std::string& n : notes) std::printf(" | %s", n.c_str());
    if (!error.empty()) std::printf(" | exception: %s", error.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!ok) ++failures;
  }

  void note(const std::string& text) { notes.push_back(text); }
};

std::vector<std::string> embedding_corpus() {
  return {"split-tet", "split-tet-twice", "cone-bipyramid3", "cone-octahedron", "cone-bipyramid5"};
}

struct SolvedRecord {
  RealizedMesh realized;
  BoundaryPlacement placement;
};

std::vector<SolvedRecord> g_solved;  // collected for the solver-contract criterion

bool check_embedded_trials(Harness& h, const std::string& name, int trials) {
  const TetMesh mesh = generate_named(name);
  const Complex complex = build_complex(mesh);
  const Graph graph = mesh_graph(complex);

  const LinklessExclusion minors = linkless_exclusion_check(graph);
  if (!minors.pass()) {
    h.note(name + ": minor exclusion failed");
    return false;
  }
  const ValidationReport report = validate_all(complex, minors);
  if (report.overall != CheckStatus::Pass) {
    h.note(name + ": validation " + check_status_name(report.overall));
    return false;
  }

  const BoundaryPlacement placement =
      place_boundary(complex, BoundaryStrategy::AsGiven, *mesh.coords);
  for (int t = 0; t < trials; ++t) {
    const WeightMatrix weights =
        assemble_weights(complex, WeightScheme::dirichlet(1.0, mix_seed(2024, t)));
    const RealizedMesh realized = solve_positions(complex, weights, placement);
    const EmbeddingCertificate cert = certify(realized);
    if (cert.verdict != Verdict::Embedded || !(cert.min_signed_volume > 0.0) ||
        !cert.volume_identity_gap || !(*cert.volume_identity_gap <= 1e-9)) {
      h.note(name + ": trial " + std::to_string(t) + " verdict " + verdict_name(cert.verdict));
      return false;
    }
    if (t < 5) g_solved.push_back({realized, placement});
  }
  return true;
}

}  // namespace

int main() {
  Harness h;

  h.criterion(1, "minor-free corpus embeds for 100 random weight draws each", [&] {
    const auto start = std::chrono::steady_clock::now();
    for (const std::string& name : embedding_corpus())
      if (!check_embedded_trials(h, name, 100)) return false;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    h.note("runtime " + std::to_string(seconds) + " s");
    return seconds < 10.0;
  });

  h.criterion(2, "uniform weights on the two-interior K6 mesh degenerate exactly", [&] {
    const TetMesh mesh = gen_floater();
    const Complex complex = build_complex(mesh);
    const BoundaryPlacement placement =
        place_boundary(complex, BoundaryStrategy::AsGiven, *mesh.coords);
    const RealizedMesh realized =
        solve_positions(complex, assemble_weights(complex, WeightScheme::uniform()), placement);
    g_solved.push_back({realized, placement});

    const double collapse = (realized.coords[4] - realized.coords[5]).norm();
    h.note("|x(U)-x(V)| = " + std::to_string(collapse));
    if (!(collapse <= 1e-10)) return false;

    int ring_tets = 0;
    for (int ti = 0; ti < complex.n_tets(); ++ti) {
      const Tet& t = complex.mesh.tets[ti];
      const bool has_u = std::count(t.begin(), t.end(), 4) > 0;
      const bool has_v = std::count(t.begin(), t.end(), 5) > 0;
      if (has_u && has_v) {
        ++ring_tets;
        if (!(std::abs(tet_signed_volume(realized, ti)) <= 1e-12)) return false;
      }
    }
    if (ring_tets != 4) return false;
    const EmbeddingCertificate cert = certify(realized);
    h.note(std::string("verdict ") + verdict_name(cert.verdict));
    return cert.verdict == Verdict::Degenerate;
  });

  h.criterion(3, "spiky random weights on the K6 mesh fail at least once in 1000 trials", [&] {
    const TetMesh mesh = gen_floater();
    const Complex complex = build_complex(mesh);
    const BoundaryPlacement placement =
        place_boundary(complex, BoundaryStrategy::AsGiven, *mesh.coords);
    const ExperimentResult a =
        run_random_weight_experiment(complex, placement, 1000, 0.1, 1, "floater");
    const ExperimentResult b =
        run_random_weight_experiment(complex, placement, 1000, 0.1, 1, "floater");
    h.note("failures " + std::to_string(a.failures) + "/1000");
    return a.failures >= 1 && to_json(a).dump() == to_json(b).dump();
  });

  h.criterion(4, "minor search agrees with the deletion/contraction oracle", [&] {
    std::vector<std::pair<std::string, Graph>> corpus;
    for (const std::string& name : generator_names()) {
      const Graph g = mesh_graph(build_complex(generate_named(name)));
      if (g.n <= 9) corpus.emplace_back(name, g);
    }
    corpus.emplace_back("two-tet", mesh_graph(build_complex(oracles::two_tet_mesh())));
    corpus.emplace_back("ear", mesh_graph(build_complex(oracles::ear_mesh())));
    corpus.emplace_back("bipyramid", oracles::bipyramid_graph());
    corpus.emplace_back("k4", Graph::complete(4));
    corpus.emplace_back("k5", Graph::complete(5));

    int checked = 0;
    for (const auto& [name, host] : corpus) {
      for (const auto& [pname, pattern] :
           {std::pair<std::string, Graph>{"k6", k6_pattern()}, {"k331", k331_pattern()}}) {
        const MinorQueryResult fast = has_minor(host, pattern);
        if (fast.answer == MinorAnswer::Unknown) {
          h.note(name + "/" + pname + ": unknown");
          return false;
        }
        if (oracles::brute_force_has_minor(host, pattern) != (fast.answer == MinorAnswer::Yes)) {
          h.note(name + "/" + pname + ": disagreement");
          return false;
        }
        ++checked;
      }
    }
    h.note(std::to_string(checked) + " host/pattern pairs");

    const MinorQueryResult pk6 = has_minor(Graph::petersen(), k6_pattern());
    const MinorQueryResult pk331 = has_minor(Graph::petersen(), k331_pattern());
    return pk6.answer == MinorAnswer::No && pk331.answer == MinorAnswer::No;
  });

  h.criterion(5, "4-clique bound: K6 gives (15, 9, true) and the rejector is sound", [&] {
    const CliqueBound k6 = four_clique_bound_check(Graph::complete(6));
    if (k6.clique_count != 15 || k6.bound != 9 || !k6.implies_k6) return false;
    for (const std::string& name : generator_names()) {
      const Graph g = mesh_graph(build_complex(generate_named(name)));
      if (four_clique_bound_check(g).implies_k6 &&
          has_minor(g, k6_pattern()).answer != MinorAnswer::Yes)
        return false;
    }
    return true;
  });

  h.criterion(6, "Euler/ball checks and rejection of an improper gluing", [&] {
    TetMesh single;
    single.n_vertices = 4;
    single.tets = {{0, 1, 2, 3}};
    for (const TetMesh& mesh :
         {single, gen_split_tet(), gen_floater()}) {
      const EulerCheck e = euler_check(build_complex(mesh));
      if (e.chi_complex != 1 || e.chi_boundary != 2 || !e.is_ball_candidate) return false;
    }
    try {
      build_complex(oracles::edge_glued_mesh());
      return false;  // must be rejected
    } catch (const Error&) {
    }
    return true;
  });

  h.criterion(7, "validator pinpoints the offending simplices", [&] {
    const CheckResult tri =
        check_boundary_triangle_condition(build_complex(oracles::two_tet_mesh()));
    if (tri.status != CheckStatus::Fail || tri.witness != std::vector<std::vector<int>>{{0, 1, 2}})
      return false;

    const CheckResult conn = check_four_connected(oracles::bipyramid_graph());
    if (conn.status != CheckStatus::Fail || conn.witness.size() != 1 ||
        conn.witness[0].size() != 3 ||
        !oracles::cut_separates(oracles::bipyramid_graph(), conn.witness[0]))
      return false;

    const CheckResult link = check_link_connectivity(build_complex(oracles::ear_mesh()));
    if (link.status != CheckStatus::Fail) return false;
    bool apex = false;
    for (const auto& w : link.witness) apex |= w == std::vector<int>{5};
    return apex;
  });

  h.criterion(8, "solver contract: residual and strict maximum principle", [&] {
    if (g_solved.empty()) return false;
    for (const SolvedRecord& record : g_solved) {
      if (!(record.realized.residual <= 1e-10)) return false;
      for (int axis = 0; axis < 3; ++axis) {
        double lo = 1e300, hi = -1e300;
        for (const auto& [v, p] : record.placement.coords) {
          lo = std::min(lo, p[axis]);
          hi = std::max(hi, p[axis]);
        }
        for (int v : record.realized.complex.interior_vertices()) {
          const double x = record.realized.coords[v][axis];
          if (!(x > lo && x < hi)) return false;
        }
      }
    }
    h.note(std::to_string(g_solved.size()) + " solved meshes checked");
    return true;
  });

  h.criterion(9, "containment counting agrees with the all-tets oracle", [&] {
    for (const std::string& name : embedding_corpus()) {
      const TetMesh mesh = generate_named(name);
      const Complex complex = build_complex(mesh);
      const RealizedMesh realized = solve_positions(
          complex, assemble_weights(complex, WeightScheme::uniform()),
          place_boundary(complex, BoundaryStrategy::AsGiven, *mesh.coords));
      Vec3 lo = realized.coords.front(), hi = realized.coords.front();
      for (const Vec3& p : realized.coords) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
      }
      Rng rng(mix_seed(9, std::hash<std::string>{}(name)));
      for (int i = 0; i < 1000; ++i) {
        const Vec3 p(lo.x() + rng.uniform() * (hi.x() - lo.x()),
                     lo.y() + rng.uniform() * (hi.y() - lo.y()),
                     lo.z() + rng.uniform() * (hi.z() - lo.z()));
        if (count_containing_tets(realized, p) != oracles::brute_force_containing_tets(realized, p))
          return false;
      }
    }
    return true;
  });

  std::printf("%d of 9 criteria passed\n", 9 - h.failures);
  return h.failures == 0 ? 0 : 1;
}
