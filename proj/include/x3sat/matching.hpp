#pragma once

#include "x3sat/formula.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace x3sat {

struct Eliminated {
  Formula formula;
  bool conflict = false;
};

// Normalises a formula of maximum degree 2 until every variable is monotone
// positive: (1,1)-variables are merged away, complementary pairs and repeated
// literals are resolved, unit clauses are propagated and negative monotone
// variables are flipped. Clauses may grow beyond width 3.
Eliminated eliminate_11(Formula f, ReconstructionLog& log);

struct MatchGraph {
  std::vector<ClauseId> vertices;              // vertex i is clause vertices[i]
  std::vector<std::pair<int, int>> edges;      // simple graph, i < j
  std::vector<Var> edge_var;                   // lowest variable linking the pair
  std::vector<bool> mandatory;                 // clause has no singleton
};

// Pre: every variable monotone positive, degree <= 2, no repeated variable
// inside a clause.
MatchGraph build_match_instance(const Formula& f);

// Maximum-cardinality matching; mate[v] is the partner of v or -1.
std::vector<int> maximum_matching(int num_vertices, const std::vector<std::pair<int, int>>& edges);

struct Degree2Result {
  bool satisfiable = false;
  std::optional<Assignment> model;  // covers every variable of the input
};

// Exact decision for formulas with maximum degree <= 2, by reduction to a
// matching that saturates the clauses without singletons.
Degree2Result solve_degree2(const Formula& f);

} // namespace x3sat
