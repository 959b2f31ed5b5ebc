#include "x3sat/matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace x3sat {

namespace {

enum class Step { Changed, Conflict, Stable };

Step normalise_once(Formula& f, ReconstructionLog& log) {
  for (const auto& [id, c] : f.clauses()) {
    if (c.width() == 0) return Step::Conflict;
    if (c.width() == 1) return assign_true(f, c.literals[0], log) == SubstOutcome::Conflict ? Step::Conflict : Step::Changed;
  }
  for (const auto& [id, c] : f.clauses()) {
    for (Literal l : c.literals) {
      if (!c.contains(~l)) continue;
      // One of l, ~l is true, so everything else in the clause is false.
      std::vector<Literal> others;
      for (Literal u : c.literals)
        if (u.var() != l.var()) others.push_back(u);
      if (!others.empty()) {
        if (substitute_false(f, others, log) == SubstOutcome::Conflict) return Step::Conflict;
        return Step::Changed;
      }
      ClauseId gone = id;
      Var v = l.var();
      f.remove_clause(gone);
      if (!f.mentions(v)) log.free(v);
      return Step::Changed;
    }
    for (Literal l : c.literals)
      if (c.count(l) > 1) return substitute_false(f, l, log) == SubstOutcome::Conflict ? Step::Conflict : Step::Changed;
  }
  for (Var v : f.variables()) {
    auto pc = f.polarity_counts(v);
    if (pc.positive == 0) {
      flip_variable(f, v, log);
      return Step::Changed;
    }
    if (pc.positive == 1 && pc.negative == 1) {
      ClauseId a = f.clauses_with(Literal::positive(v)).front();
      ClauseId b = f.clauses_with(Literal::negative(v)).front();
      std::vector<Literal> rest_a, merged;
      for (Literal u : f.clause(a).literals)
        if (u.var() != v) rest_a.push_back(u);
      merged = rest_a;
      for (Literal u : f.clause(b).literals)
        if (u.var() != v) merged.push_back(u);
      log.exclusive(Literal::positive(v), rest_a);
      f.replace_clause(a, std::move(merged));
      f.remove_clause(b);
      return Step::Changed;
    }
  }
  return Step::Stable;
}

} // namespace

Eliminated eliminate_11(Formula f, ReconstructionLog& log) {
  if (f.max_degree() > 2) throw std::invalid_argument("eliminate_11 expects maximum degree <= 2");
  for (;;) {
    Step s = normalise_once(f, log);
    if (s == Step::Conflict) return {std::move(f), true};
    if (s == Step::Stable) return {std::move(f), false};
  }
}

MatchGraph build_match_instance(const Formula& f) {
  MatchGraph g;
  std::map<ClauseId, int> index;
  for (const auto& [id, c] : f.clauses()) {
    index.emplace(id, static_cast<int>(g.vertices.size()));
    g.vertices.push_back(id);
    bool has_singleton = false;
    for (Literal l : c.literals) has_singleton = has_singleton || f.is_singleton(l.var());
    g.mandatory.push_back(!has_singleton);
  }
  std::map<std::pair<int, int>, Var> pairs;
  for (Var v : f.variables()) {
    const auto& occ = f.occurrences(v);
    if (occ.size() > 2 || occ.front().negated || occ.back().negated)
      throw std::invalid_argument("build_match_instance expects monotone positive variables of degree <= 2");
    if (occ.size() < 2) continue;
    int a = index.at(occ[0].clause), b = index.at(occ[1].clause);
    if (a == b) throw std::invalid_argument("build_match_instance: variable repeated inside a clause");
    pairs.try_emplace({std::min(a, b), std::max(a, b)}, v);
  }
  for (auto [e, v] : pairs) {
    g.edges.push_back(e);
    g.edge_var.push_back(v);
  }
  return g;
}

std::vector<int> maximum_matching(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(static_cast<std::size_t>(num_vertices));
  for (auto [a, b] : edges) boost::add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), g);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(static_cast<std::size_t>(num_vertices));
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  std::vector<int> out(static_cast<std::size_t>(num_vertices), -1);
  const auto none = boost::graph_traits<Graph>::null_vertex();
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != none) out[v] = static_cast<int>(mate[v]);
  return out;
}

Degree2Result solve_degree2(const Formula& input) {
  ReconstructionLog log;
  Eliminated e = eliminate_11(input, log);
  if (e.conflict) return {};
  const Formula& f = e.formula;
  MatchGraph g = build_match_instance(f);

  // Doubled graph: a perfect matching exists iff some matching saturates
  // every mandatory vertex.
  int n = static_cast<int>(g.vertices.size());
  std::vector<std::pair<int, int>> doubled;
  for (auto [a, b] : g.edges) {
    doubled.emplace_back(a, b);
    doubled.emplace_back(a + n, b + n);
  }
  for (int v = 0; v < n; ++v)
    if (!g.mandatory[static_cast<std::size_t>(v)]) doubled.emplace_back(v, v + n);
  std::vector<int> mate = maximum_matching(2 * n, doubled);
  if (std::count(mate.begin(), mate.end(), -1) > 0) return {};

  std::map<std::pair<int, int>, Var> edge_var;
  for (std::size_t i = 0; i < g.edges.size(); ++i) edge_var.emplace(g.edges[i], g.edge_var[i]);

  Assignment model;
  for (Var v : f.variables()) model[v] = false;
  for (int v = 0; v < n; ++v) {
    int u = mate[static_cast<std::size_t>(v)];
    if (u == v + n) {
      std::optional<Literal> pick;
      for (Literal l : f.clause(g.vertices[static_cast<std::size_t>(v)]).literals)
        if (f.is_singleton(l.var()) && (!pick || l.var() < pick->var())) pick = l;
      model[pick->var()] = pick->holds(true);
    } else if (v < u) {
      model[edge_var.at({v, u})] = true;
    }
  }
  Assignment full = log.replay(std::move(model));
  for (Var v : input.variables()) full.try_emplace(v, false);
  return {true, std::move(full)};
}

} // namespace x3sat
