#pragma once

#include "x3sat/formula.hpp"

#include <optional>
#include <span>
#include <vector>

namespace x3sat {

struct ConnectionEdge {
  ClauseId a;  // a < b
  ClauseId b;
  std::vector<Literal> labels;  // shared literals, sorted
};

// Clause graph with an edge wherever two clauses contain an identical literal.
struct ConnectionGraph {
  std::vector<ClauseId> vertices;
  std::vector<ConnectionEdge> edges;

  // Edges carrying more than one label; empty on simplified formulas.
  std::vector<ConnectionEdge> multi_labelled() const;
};

ConnectionGraph build_graph(const Formula& f);

// Number of bridges of the connection graph.
std::size_t count_cut_edges(const ConnectionGraph& g);

// Partition into variable-disjoint sub-formulas (clause ids preserved),
// ordered by smallest clause id.
std::vector<Formula> components(const Formula& f);

struct CutSplit {
  Formula f1;
  Formula f2;
  Literal l;
};

// Succeeds when F1 is a proper non-empty subset of F, the only variable the
// two sides share is var(l), and l itself occurs on both sides. With
// `require_same_sign` false, any occurrence of var(l) on the far side counts.
std::optional<CutSplit> verify_cut(const Formula& f, std::span<const ClauseId> f1, Literal l,
                                   bool require_same_sign = true);

} // namespace x3sat
