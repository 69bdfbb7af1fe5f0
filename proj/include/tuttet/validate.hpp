#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tuttet/mesh.hpp"
#include "tuttet/minors.hpp"

namespace tuttet {

enum class CheckStatus { Pass, Fail, Partial, Skipped };

const char* check_status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::vector<std::vector<int>> witness;  // offending simplices or vertex sets
  std::string detail;
};

// Every interior face must avoid having all three vertices on the boundary.
CheckResult check_boundary_triangle_condition(const Complex& complex);

// kappa(G) >= 4; on failure the witness is a vertex cut of size < 4.
CheckResult check_four_connected(const Graph& graph);

// Every vertex link graph must be 3-connected.
CheckResult check_link_connectivity(const Complex& complex);

// With at least one interior vertex: no tet with three boundary faces and
// minimum vertex degree 4. Vacuous (skipped) otherwise.
CheckResult check_no_ears_and_degree(const Complex& complex);

// Necessary ball conditions: chi = 1, boundary chi = 2, connected complex
// and boundary. Simple-connectedness itself is not certified.
CheckResult check_ball_necessary_conditions(const Complex& complex);

struct ValidationReport {
  std::vector<CheckResult> checks;
  CheckStatus overall = CheckStatus::Fail;
};

// Aggregates all hypothesis checks; pass iff no non-skipped check fails.
// Budget-exhausted minor queries surface as Partial.
ValidationReport validate_all(const Complex& complex,
                              const std::optional<LinklessExclusion>& minor_result = std::nullopt);

}  // namespace tuttet
