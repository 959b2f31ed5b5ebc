#include "x3sat/connection.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace x3sat {

std::vector<ConnectionEdge> ConnectionGraph::multi_labelled() const {
  std::vector<ConnectionEdge> out;
  for (const auto& e : edges)
    if (e.labels.size() > 1) out.push_back(e);
  return out;
}

ConnectionGraph build_graph(const Formula& f) {
  ConnectionGraph g;
  std::map<std::pair<ClauseId, ClauseId>, std::set<Literal>> labels;
  for (const auto& [id, c] : f.clauses()) {
    g.vertices.push_back(id);
    for (Literal l : c.literals)
      for (ClauseId other : f.clauses_with(l))
        if (other > id) labels[{id, other}].insert(l);
  }
  for (auto& [key, ls] : labels) g.edges.push_back({key.first, key.second, {ls.begin(), ls.end()}});
  return g;
}

std::size_t count_cut_edges(const ConnectionGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                      boost::property<boost::edge_index_t, std::size_t>>;
  std::map<ClauseId, std::size_t> index;
  for (ClauseId v : g.vertices) index.emplace(v, index.size());
  Graph graph(g.vertices.size());
  std::size_t k = 0;
  for (const auto& e : g.edges) boost::add_edge(index.at(e.a), index.at(e.b), k++, graph);
  if (k == 0) return 0;
  std::vector<std::size_t> component(k);
  auto edge_component = boost::make_iterator_property_map(component.begin(), boost::get(boost::edge_index, graph));
  std::size_t n = boost::biconnected_components(graph, edge_component);
  std::vector<std::size_t> size(n, 0);
  for (std::size_t c : component) ++size[c];
  return static_cast<std::size_t>(std::count(size.begin(), size.end(), std::size_t{1}));
}

std::vector<Formula> components(const Formula& f) {
  std::vector<Formula> out;
  std::set<ClauseId> seen;
  for (const auto& [start, unused] : f.clauses()) {
    if (seen.contains(start)) continue;
    std::vector<ClauseId> group;
    std::vector<ClauseId> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      ClauseId id = stack.back();
      stack.pop_back();
      group.push_back(id);
      for (Literal l : f.clause(id).literals)
        for (const Occurrence& o : f.occurrences(l.var()))
          if (seen.insert(o.clause).second) stack.push_back(o.clause);
    }
    std::sort(group.begin(), group.end());
    Formula part = subformula(f, group);
    part.set_declared_vars(f.declared_vars());
    out.push_back(std::move(part));
  }
  return out;
}

std::optional<CutSplit> verify_cut(const Formula& f, std::span<const ClauseId> f1, Literal l, bool require_same_sign) {
  std::set<ClauseId> side(f1.begin(), f1.end());
  if (side.empty() || side.size() >= f.num_clauses()) return std::nullopt;
  for (ClauseId id : side)
    if (!f.has_clause(id)) return std::nullopt;
  std::vector<ClauseId> rest;
  for (const auto& [id, c] : f.clauses())
    if (!side.contains(id)) rest.push_back(id);

  std::vector<ClauseId> left(side.begin(), side.end());
  auto vars1 = variables_of(f, left);
  auto vars2 = variables_of(f, rest);
  std::vector<Var> shared;
  std::set_intersection(vars1.begin(), vars1.end(), vars2.begin(), vars2.end(), std::back_inserter(shared));
  if (shared != std::vector<Var>{l.var()}) return std::nullopt;

  auto occurs = [&](const std::vector<ClauseId>& ids, Literal lit) {
    return std::any_of(ids.begin(), ids.end(), [&](ClauseId id) { return f.clause(id).contains(lit); });
  };
  if (!occurs(left, l)) return std::nullopt;
  if (require_same_sign && !occurs(rest, l)) return std::nullopt;

  CutSplit cut{subformula(f, left), subformula(f, rest), l};
  cut.f1.set_declared_vars(f.declared_vars());
  cut.f2.set_declared_vars(f.declared_vars());
  return cut;
}

} // namespace x3sat
