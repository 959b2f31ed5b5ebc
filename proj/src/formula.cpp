#include "x3sat/formula.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace x3sat {

int Clause::count(Literal l) const {
  return static_cast<int>(std::count(literals.begin(), literals.end(), l));
}

bool Clause::mentions(Var v) const {
  return std::any_of(literals.begin(), literals.end(), [v](Literal l) { return l.var() == v; });
}

bool Clause::has_distinct_vars() const {
  for (std::size_t i = 0; i < literals.size(); ++i)
    for (std::size_t j = i + 1; j < literals.size(); ++j)
      if (literals[i].var() == literals[j].var()) return false;
  return true;
}

Formula Formula::from_dimacs(std::initializer_list<std::initializer_list<int>> clauses) {
  std::vector<std::vector<int>> v;
  for (auto& c : clauses) v.emplace_back(c);
  return from_dimacs(v);
}

Formula Formula::from_dimacs(const std::vector<std::vector<int>>& clauses) {
  Formula f;
  int n = 0;
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    for (int code : c) {
      if (code == 0) throw std::invalid_argument("literal 0 is reserved");
      lits.push_back(Literal::from_dimacs(code));
      n = std::max(n, std::abs(code));
    }
    f.add_clause(std::move(lits));
  }
  f.declared_vars_ = n;
  return f;
}

ClauseId Formula::add_clause(std::vector<Literal> literals) {
  Clause c{next_id_++, std::move(literals)};
  index_clause(c);
  clauses_.emplace(c.id, std::move(c));
  return next_id_ - 1;
}

void Formula::insert_clause(Clause clause) {
  if (clauses_.contains(clause.id)) throw std::invalid_argument("duplicate clause id");
  next_id_ = std::max(next_id_, clause.id + 1);
  index_clause(clause);
  clauses_.emplace(clause.id, std::move(clause));
}

void Formula::remove_clause(ClauseId id) {
  auto it = clauses_.find(id);
  if (it == clauses_.end()) throw std::invalid_argument("clause " + std::to_string(id) + " not in formula");
  unindex_clause(it->second);
  clauses_.erase(it);
}

void Formula::replace_clause(ClauseId id, std::vector<Literal> literals) {
  auto it = clauses_.find(id);
  if (it == clauses_.end()) throw std::invalid_argument("clause " + std::to_string(id) + " not in formula");
  unindex_clause(it->second);
  it->second.literals = std::move(literals);
  index_clause(it->second);
}

const Clause& Formula::clause(ClauseId id) const {
  auto it = clauses_.find(id);
  if (it == clauses_.end()) throw std::invalid_argument("clause " + std::to_string(id) + " not in formula");
  return it->second;
}

std::size_t Formula::num_literals() const {
  std::size_t total = 0;
  for (const auto& [id, c] : clauses_) total += c.width();
  return total;
}

bool Formula::has_empty_clause() const {
  return std::any_of(clauses_.begin(), clauses_.end(), [](const auto& kv) { return kv.second.literals.empty(); });
}

const std::vector<Occurrence>& Formula::occurrences(Var v) const {
  static const std::vector<Occurrence> none;
  auto it = occurrences_.find(v);
  return it == occurrences_.end() ? none : it->second;
}

std::vector<Var> Formula::variables() const {
  std::vector<Var> vars;
  vars.reserve(occurrences_.size());
  for (const auto& [v, occ] : occurrences_) vars.push_back(v);
  return vars;
}

PolarityCounts Formula::polarity_counts(Var v) const {
  PolarityCounts pc;
  for (const auto& o : occurrences(v)) (o.negated ? pc.negative : pc.positive)++;
  return pc;
}

int Formula::max_degree() const {
  int best = 0;
  for (const auto& [v, occ] : occurrences_) best = std::max(best, static_cast<int>(occ.size()));
  return best;
}

int Formula::count(Literal l) const {
  int n = 0;
  for (const auto& o : occurrences(l.var()))
    if (o.negated == l.negated()) ++n;
  return n;
}

std::vector<ClauseId> Formula::clauses_with(Literal l) const {
  std::vector<ClauseId> ids;
  for (const auto& o : occurrences(l.var()))
    if (o.negated == l.negated() && (ids.empty() || ids.back() != o.clause)) ids.push_back(o.clause);
  return ids;
}

std::vector<ClauseId> Formula::clauses_with(Var v) const {
  std::vector<ClauseId> ids;
  for (const auto& o : occurrences(v))
    if (ids.empty() || ids.back() != o.clause) ids.push_back(o.clause);
  return ids;
}

void Formula::index_clause(const Clause& c) {
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    Literal l = c.literals[i];
    if (l.var() <= 0) throw std::invalid_argument("variable indices must be positive");
    auto& occ = occurrences_[l.var()];
    Occurrence o{c.id, static_cast<int>(i), l.negated()};
    auto pos = std::upper_bound(occ.begin(), occ.end(), o, [](const Occurrence& a, const Occurrence& b) {
      return a.clause != b.clause ? a.clause < b.clause : a.position < b.position;
    });
    occ.insert(pos, o);
  }
}

void Formula::unindex_clause(const Clause& c) {
  for (Literal l : c.literals) {
    auto it = occurrences_.find(l.var());
    if (it == occurrences_.end()) continue;
    auto& occ = it->second;
    occ.erase(std::remove_if(occ.begin(), occ.end(), [&](const Occurrence& o) { return o.clause == c.id; }),
              occ.end());
    if (occ.empty()) occurrences_.erase(it);
  }
}

std::vector<std::string> Formula::check_index() const {
  std::vector<std::string> problems;
  std::map<Var, std::vector<Occurrence>> rebuilt;
  for (const auto& [id, c] : clauses_) {
    if (c.id != id) problems.push_back("clause keyed " + std::to_string(id) + " carries id " + std::to_string(c.id));
    for (std::size_t i = 0; i < c.literals.size(); ++i)
      rebuilt[c.literals[i].var()].push_back({id, static_cast<int>(i), c.literals[i].negated()});
  }
  auto same = [](const Occurrence& a, const Occurrence& b) {
    return a.clause == b.clause && a.position == b.position && a.negated == b.negated;
  };
  for (const auto& [v, occ] : rebuilt) {
    const auto& have = occurrences(v);
    if (!std::equal(occ.begin(), occ.end(), have.begin(), have.end(), same))
      problems.push_back("occurrence list of variable " + std::to_string(v) + " is stale");
  }
  for (const auto& [v, occ] : occurrences_)
    if (!rebuilt.contains(v)) problems.push_back("variable " + std::to_string(v) + " indexed but absent");
  return problems;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.clauses_.size() != b.clauses_.size()) return false;
  auto ia = a.clauses_.begin();
  auto ib = b.clauses_.begin();
  for (; ia != a.clauses_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.literals != ib->second.literals) return false;
  return true;
}

// ---------------------------------------------------------------------------

PolarityCounts polarity_counts(const Formula& f, Var v) { return f.polarity_counts(v); }

std::size_t num_connected_clauses(const Formula& f, Literal x) {
  std::set<Var> neighbours;
  for (ClauseId id : f.clauses_with(x))
    for (Literal l : f.clause(id).literals)
      if (l.var() != x.var()) neighbours.insert(l.var());
  std::size_t count = 0;
  for (const auto& [id, c] : f.clauses())
    if (std::any_of(c.literals.begin(), c.literals.end(), [&](Literal l) { return neighbours.contains(l.var()); }))
      ++count;
  return count;
}

std::vector<Var> variables_of(const Formula& f, std::span<const ClauseId> ids) {
  std::set<Var> vars;
  for (ClauseId id : ids)
    for (Literal l : f.clause(id).literals) vars.insert(l.var());
  return {vars.begin(), vars.end()};
}

Formula subformula(const Formula& f, std::span<const ClauseId> ids) {
  Formula sub(f.declared_vars());
  for (ClauseId id : ids) sub.insert_clause(f.clause(id));
  return sub;
}

Formula conjoin(const Formula& a, const Formula& b) {
  Formula out(std::max(a.declared_vars(), b.declared_vars()));
  for (const auto& [id, c] : a.clauses()) out.add_clause(c.literals);
  for (const auto& [id, c] : b.clauses()) out.add_clause(c.literals);
  return out;
}

PartialAssignmentError::PartialAssignmentError(std::vector<Var> missing)
    : std::invalid_argument([&] {
        std::ostringstream os;
        os << "assignment leaves variables unassigned:";
        for (Var v : missing) os << ' ' << v;
        return os.str();
      }()),
      missing_(std::move(missing)) {}

bool evaluate_exact(const Formula& f, const Assignment& a) {
  std::vector<Var> missing;
  for (Var v : f.variables())
    if (!a.contains(v)) missing.push_back(v);
  if (!missing.empty()) throw PartialAssignmentError(std::move(missing));
  for (const auto& [id, c] : f.clauses()) {
    int true_count = 0;
    for (Literal l : c.literals) true_count += literal_value(a, l) ? 1 : 0;
    if (true_count != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Makes every literal in `trues` true and propagates exact-one consequences:
// a satisfied clause is dropped and its other literals forced false, a false
// literal is deleted from its clause.
SubstOutcome cascade(Formula& f, std::span<const Literal> trues, ReconstructionLog& log) {
  if (std::none_of(trues.begin(), trues.end(), [&](Literal l) { return f.mentions(l.var()); }))
    return SubstOutcome::Absent;
  std::map<Var, bool> forced;
  std::deque<Literal> pending(trues.begin(), trues.end());
  while (!pending.empty()) {
    Literal t = pending.front();
    pending.pop_front();
    if (auto it = forced.find(t.var()); it != forced.end()) {
      if (t.holds(it->second)) continue;
      return SubstOutcome::Conflict;
    }
    bool value = t.holds(true);
    forced.emplace(t.var(), value);
    log.bind(t.var(), value);
    for (ClauseId id : f.clauses_with(t.var())) {
      const Clause& c = f.clause(id);
      int hits = c.count(t);
      if (hits >= 2) return SubstOutcome::Conflict;
      if (hits == 1) {
        for (Literal u : c.literals)
          if (u.var() != t.var()) pending.push_back(~u);
        f.remove_clause(id);
      } else {
        std::vector<Literal> rest;
        for (Literal u : c.literals)
          if (u.var() != t.var()) rest.push_back(u);
        if (rest.empty()) return SubstOutcome::Conflict;
        f.replace_clause(id, std::move(rest));
      }
    }
  }
  return SubstOutcome::Applied;
}

} // namespace

SubstOutcome assign_true(Formula& f, Literal l, ReconstructionLog& log) {
  return cascade(f, std::span<const Literal>(&l, 1), log);
}

SubstOutcome substitute_false(Formula& f, std::span<const Literal> targets, ReconstructionLog& log) {
  std::vector<Literal> trues;
  for (Literal t : targets) trues.push_back(~t);
  return cascade(f, trues, log);
}

SubstOutcome substitute_false(Formula& f, Literal target, ReconstructionLog& log) {
  return substitute_false(f, std::span<const Literal>(&target, 1), log);
}

SubstOutcome substitute_literal(Formula& f, Literal target, Literal replacement, ReconstructionLog& log) {
  Var v = target.var();
  if (!f.mentions(v)) return SubstOutcome::Absent;
  if (replacement.var() == v) throw std::invalid_argument("literal substituted by a literal of the same variable");
  // x <- r where target = ~x means x <- ~r.
  Literal def = target.negated() ? ~replacement : replacement;
  for (ClauseId id : f.clauses_with(v)) {
    std::vector<Literal> lits = f.clause(id).literals;
    for (Literal& u : lits)
      if (u.var() == v) u = u.negated() ? ~def : def;
    f.replace_clause(id, std::move(lits));
  }
  log.alias(v, def);
  return SubstOutcome::Applied;
}

SubstOutcome substitute_clause(Formula& f, ClauseId id, std::vector<Literal> literals) {
  if (!f.has_clause(id)) return SubstOutcome::Absent;
  f.replace_clause(id, std::move(literals));
  return SubstOutcome::Applied;
}

void remove(Formula& f, std::span<const ClauseId> ids) {
  for (ClauseId id : ids)
    if (!f.has_clause(id)) throw std::invalid_argument("clause " + std::to_string(id) + " not in formula");
  for (ClauseId id : ids) f.remove_clause(id);
}

void flip_variable(Formula& f, Var v, ReconstructionLog& log) {
  for (ClauseId id : f.clauses_with(v)) {
    std::vector<Literal> lits = f.clause(id).literals;
    for (Literal& u : lits)
      if (u.var() == v) u = ~u;
    f.replace_clause(id, std::move(lits));
  }
  log.alias(v, Literal::negative(v));
}

} // namespace x3sat
