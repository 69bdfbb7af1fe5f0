#include "tuttet/validate.hpp"

#include <algorithm>
#include <sstream>

namespace tuttet {

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Partial: return "partial";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

CheckResult check_boundary_triangle_condition(const Complex& complex) {
  CheckResult r;
  r.name = "boundary_triangle_condition";
  for (const auto& [face, tets] : complex.face_tets) {
    if (tets.size() != 2) continue;
    if (complex.is_boundary_vertex(face[0]) && complex.is_boundary_vertex(face[1]) &&
        complex.is_boundary_vertex(face[2]))
      r.witness.push_back({face[0], face[1], face[2]});
  }
  if (r.witness.empty()) {
    r.status = CheckStatus::Pass;
    r.detail = "every triangle on three boundary vertices is a boundary face";
  } else {
    r.status = CheckStatus::Fail;
    r.detail = std::to_string(r.witness.size()) + " interior face(s) on three boundary vertices";
  }
  return r;
}

CheckResult check_four_connected(const Graph& graph) {
  CheckResult r;
  r.name = "four_connected";
  if (graph.n < 5) {
    r.status = CheckStatus::Fail;
    r.detail = "graph has fewer than 5 vertices, connectivity at most " + std::to_string(graph.n - 1);
    return r;
  }
  if (!is_connected(graph)) {
    r.status = CheckStatus::Fail;
    r.detail = "graph is disconnected";
    return r;
  }
  std::vector<int> cut;
  const int kappa = vertex_connectivity(graph, &cut);
  if (kappa >= 4) {
    r.status = CheckStatus::Pass;
    r.detail = "vertex connectivity " + std::to_string(kappa);
  } else {
    r.status = CheckStatus::Fail;
    r.detail = "vertex connectivity " + std::to_string(kappa);
    r.witness.push_back(cut);
  }
  return r;
}

CheckResult check_link_connectivity(const Complex& complex) {
  CheckResult r;
  r.name = "link_connectivity";
  for (int v = 0; v < complex.n_vertices(); ++v) {
    const LinkGraph link = vertex_link(complex, v);
    if (vertex_connectivity(link.graph) < 3) r.witness.push_back({v});
  }
  if (r.witness.empty()) {
    r.status = CheckStatus::Pass;
    r.detail = "all vertex links are 3-connected";
  } else {
    r.status = CheckStatus::Fail;
    r.detail = std::to_string(r.witness.size()) + " vertex link(s) below 3-connectivity";
  }
  return r;
}

CheckResult check_no_ears_and_degree(const Complex& complex) {
  CheckResult r;
  r.name = "no_ears_min_degree";
  if (complex.interior_vertices().empty()) {
    r.status = CheckStatus::Skipped;
    r.detail = "no interior vertices (vacuous)";
    return r;
  }
  for (int ti = 0; ti < complex.n_tets(); ++ti) {
    const Tet& t = complex.mesh.tets[ti];
    int boundary_count = 0;
    for (const auto& tri : induced_faces(t))
      if (complex.boundary_faces.count(make_face(tri[0], tri[1], tri[2]))) ++boundary_count;
    if (boundary_count >= 3) r.witness.push_back({t[0], t[1], t[2], t[3]});
  }
  const Graph g = mesh_graph(complex);
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) < 4) r.witness.push_back({v});
  if (r.witness.empty()) {
    r.status = CheckStatus::Pass;
    r.detail = "no ears, all vertex degrees at least 4";
  } else {
    r.status = CheckStatus::Fail;
    r.detail = "ear tets or vertices of degree below 4";
  }
  return r;
}

CheckResult check_ball_necessary_conditions(const Complex& complex) {
  CheckResult r;
  r.name = "ball_necessary_conditions";
  const EulerCheck e = euler_check(complex);
  std::ostringstream os;
  os << "chi=" << e.chi_complex << " boundary_chi=" << e.chi_boundary
     << (e.complex_connected ? " connected" : " disconnected")
     << (e.boundary_connected ? " boundary-connected" : " boundary-disconnected")
     << "; necessary conditions only, simple-connectedness not certified";
  r.detail = os.str();
  r.status = e.is_ball_candidate ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

ValidationReport validate_all(const Complex& complex,
                              const std::optional<LinklessExclusion>& minor_result) {
  ValidationReport report;
  report.checks.push_back(check_ball_necessary_conditions(complex));
  report.checks.push_back(check_boundary_triangle_condition(complex));
  report.checks.push_back(check_four_connected(mesh_graph(complex)));
  report.checks.push_back(check_link_connectivity(complex));
  report.checks.push_back(check_no_ears_and_degree(complex));

  if (minor_result) {
    CheckResult r;
    r.name = "linkless_exclusion";
    if (minor_result->unknown()) {
      r.status = CheckStatus::Partial;
      r.detail = "minor search budget exhausted";
    } else if (minor_result->pass()) {
      r.status = CheckStatus::Pass;
      r.detail = "no K6 minor, no K_{3,3,1} minor";
    } else {
      r.status = CheckStatus::Fail;
      std::string found;
      if (minor_result->k6.answer == MinorAnswer::Yes) {
        found = "K6";
        for (const auto& set : minor_result->k6.model->branch_sets) r.witness.push_back(set);
      }
      if (minor_result->k331.answer == MinorAnswer::Yes) {
        found += found.empty() ? "K_{3,3,1}" : " and K_{3,3,1}";
        if (r.witness.empty())
          for (const auto& set : minor_result->k331.model->branch_sets) r.witness.push_back(set);
      }
      r.detail = found + " minor found";
    }
    report.checks.push_back(std::move(r));
  }

  bool any_fail = false, any_partial = false;
  for (const CheckResult& c : report.checks) {
    any_fail |= c.status == CheckStatus::Fail;
    any_partial |= c.status == CheckStatus::Partial;
  }
  report.overall =
      any_fail ? CheckStatus::Fail : (any_partial ? CheckStatus::Partial : CheckStatus::Pass);
  return report;
}

}  // namespace tuttet
