#pragma once

#include <optional>
#include <vector>

#include "tuttet/graph.hpp"

namespace tuttet {

enum class MinorAnswer { Yes, No, Unknown };

const char* minor_answer_name(MinorAnswer a);

// A minor model: one connected host vertex set per pattern vertex, pairwise
// disjoint, with a host edge between the sets of every pattern edge.
struct MinorModel {
  std::vector<std::vector<int>> branch_sets;
};

struct MinorQueryResult {
  MinorAnswer answer = MinorAnswer::Unknown;
  std::optional<MinorModel> model;  // present iff answer == Yes
  long nodes_explored = 0;
};

inline constexpr long kDefaultMinorBudget = 10'000'000;

// Exact minor test by branch-set search: pattern vertices are seeded on
// distinct host vertices, then branch sets grow one adjacent vertex at a
// time until every pattern edge is covered. Exhaustive within the node
// budget; Unknown when the budget runs out.
MinorQueryResult has_minor(const Graph& host, const Graph& pattern,
                           long budget = kDefaultMinorBudget);

bool verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model);

Graph k6_pattern();
Graph k331_pattern();

struct LinklessExclusion {
  MinorQueryResult k6;
  MinorQueryResult k331;
  bool pass() const { return k6.answer == MinorAnswer::No && k331.answer == MinorAnswer::No; }
  bool unknown() const {
    return k6.answer == MinorAnswer::Unknown || k331.answer == MinorAnswer::Unknown;
  }
};

// Tests exclusion of the two forbidden minors relevant to tetrahedral
// meshes, K6 and K_{3,3,1}.
LinklessExclusion linkless_exclusion_check(const Graph& graph, long budget = kDefaultMinorBudget);

struct CliqueBound {
  long clique_count = 0;  // number of 4-cliques
  long bound = 0;         // 4n - 15
  bool implies_k6 = false;
};

// A graph on n vertices with more than 4n-15 4-cliques must contain a K6
// minor; cheap rejector ahead of the exact search.
CliqueBound four_clique_bound_check(const Graph& graph);

// The seven-graph family obtained from K6 by repeated delta-wye / wye-delta
// transforms, deduplicated up to isomorphism (includes K6, K_{3,3,1} and the
// Petersen graph).
const std::vector<Graph>& petersen_family();

}  // namespace tuttet
