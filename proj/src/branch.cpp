#include "x3sat/branch.hpp"

#include "x3sat/matching.hpp"
#include "x3sat/oracle.hpp"
#include "x3sat/propagate.hpp"

#include <algorithm>
#include <set>

namespace x3sat {

namespace {

struct NodeLimitReached {};

std::set<Var> vars_of(const Clause& c, Var except = 0) {
  std::set<Var> out;
  for (Literal l : c.literals)
    if (l.var() != except) out.insert(l.var());
  return out;
}

std::size_t overlap(const Clause& c, const std::set<Var>& vars) {
  std::size_t k = 0;
  for (Literal l : c.literals) k += vars.contains(l.var()) ? 1 : 0;
  return k;
}

// The literal of `c` whose variable lies in `vars` (exactly one expected).
Literal literal_in(const Clause& c, const std::set<Var>& vars) {
  for (Literal l : c.literals)
    if (vars.contains(l.var())) return l;
  throw InternalError("literal_in: no literal over the given variables");
}

std::optional<Literal> singleton_outside(const Formula& f, const Clause& c, const std::set<Var>& inside) {
  for (Literal l : c.literals)
    if (!inside.contains(l.var())) return f.is_singleton(l.var()) ? std::optional<Literal>(l) : std::nullopt;
  return std::nullopt;
}

// Fills the Case 6 sub-tag for exactly two connecting clauses.
void classify_two(const Formula& f, CaseSelection& sel) {
  CaseContext& ctx = sel.context;
  const Clause& c1 = f.clause(ctx.clauses[0]);
  const Clause& c2 = f.clause(ctx.clauses[1]);
  const Clause& c3 = f.clause(ctx.clauses[2]);
  Var x = ctx.x->var();
  std::set<Var> a = vars_of(c1, x), b = vars_of(c2, x), p = vars_of(c3, x);

  for (int order = 0; order < 2; ++order) {
    const Clause& c4 = f.clause(ctx.connecting[static_cast<std::size_t>(order)]);
    const Clause& c5 = f.clause(ctx.connecting[static_cast<std::size_t>(1 - order)]);
    // C4 meets C1 and C2 once each, C5 meets only C3, once.
    if (overlap(c4, a) == 1 && overlap(c4, b) == 1 && overlap(c4, p) == 0 && overlap(c5, p) == 1 &&
        overlap(c5, a) == 0 && overlap(c5, b) == 0) {
      std::set<Var> y_vars{literal_in(c4, a).var(), literal_in(c4, b).var()};
      bool z1_single = singleton_outside(f, c4, y_vars).has_value();
      sel.tag = z1_single ? "6.1.1" : "6.1.2";
      if (z1_single) {
        ctx.cut_literal = literal_in(c3, std::set<Var>{literal_in(c5, p).var()});
        ctx.cut_side = {c1.id, c2.id, c3.id, c4.id};
      }
      return;
    }
    // C4 meets one of C1/C2 once, C5 meets the other one and C3 once each.
    for (int side = 0; side < 2; ++side) {
      const std::set<Var>& near = side == 0 ? a : b;
      const std::set<Var>& far = side == 0 ? b : a;
      const Clause& cn = side == 0 ? c1 : c2;
      if (overlap(c4, near) == 1 && overlap(c4, far) == 0 && overlap(c4, p) == 0 && overlap(c5, far) == 1 &&
          overlap(c5, p) == 1 && overlap(c5, near) == 0) {
        std::set<Var> y_vars{literal_in(c5, far).var(), literal_in(c5, p).var()};
        bool z3_single = singleton_outside(f, c5, y_vars).has_value();
        sel.tag = z3_single ? "6.1.3" : "6.1.4";
        if (z3_single) {
          ctx.cut_literal = literal_in(cn, std::set<Var>{literal_in(c4, near).var()});
          ctx.cut_side = {c1.id, c2.id, c3.id, c5.id};
        }
        return;
      }
    }
  }
  sel.tag = "6.1.5";
}

} // namespace

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Satisfiable: return "satisfiable";
    case Decision::Unsatisfiable: return "unsatisfiable";
    case Decision::Aborted: return "aborted";
  }
  return "?";
}

CaseSelection select_case(const Formula& f, const SolverConfig& config) {
  CaseSelection sel;
  if (f.has_empty_clause()) return {"1", {}};
  if (f.empty()) return {"2", {}};
  if (f.num_clauses() < 6) return {"3", {}};
  if (config.decompose && components(f).size() > 1) return {"4", {}};

  int phi = f.max_degree();
  if (phi >= 4) {
    Var best = 0;
    PolarityCounts best_pc;
    for (Var v : f.variables()) {
      auto pc = f.polarity_counts(v);
      if (pc.degree() != phi) continue;
      if (best == 0 || pc.positive > best_pc.positive) {
        best = v;
        best_pc = pc;
      }
    }
    sel.tag = "5";
    sel.context.x = Literal::positive(best);
    return sel;
  }
  if (phi == 3) {
    auto context_for = [&](Literal x) {
      CaseContext ctx;
      ctx.x = x;
      ctx.clauses = f.clauses_with(x);
      for (ClauseId id : f.clauses_with(~x)) ctx.clauses.push_back(id);
      std::set<Var> yv;
      for (ClauseId id : ctx.clauses)
        for (Literal l : f.clause(id).literals) {
          if (l.var() == x.var()) continue;
          (f.clause(id).contains(x) ? ctx.y1 : ctx.y2).push_back(l);
          yv.insert(l.var());
        }
      std::set<ClauseId> own(ctx.clauses.begin(), ctx.clauses.end());
      std::set<ClauseId> conn;
      for (Var v : yv)
        for (ClauseId id : f.clauses_with(v))
          if (!own.contains(id)) conn.insert(id);
      ctx.connecting.assign(conn.begin(), conn.end());
      return ctx;
    };
    for (Var v : f.variables()) {
      auto pc = f.polarity_counts(v);
      if (pc.positive == 2 && pc.negative == 1) {
        sel.context = context_for(Literal::positive(v));
        bool triples = std::all_of(sel.context.clauses.begin(), sel.context.clauses.end(),
                                   [&](ClauseId id) { return f.clause(id).width() == 3; });
        if (sel.context.connecting.size() >= 3) sel.tag = "6.2";
        else if (sel.context.connecting.size() == 2 && triples) classify_two(f, sel);
        else sel.tag = "6.1.5";
        return sel;
      }
    }
    for (Var v : f.variables()) {
      auto pc = f.polarity_counts(v);
      if (pc.positive == 3 && pc.negative == 0) {
        sel.tag = "7";
        sel.context = context_for(Literal::positive(v));
        return sel;
      }
    }
    throw InternalError("select_case: degree-3 variable that is neither (2,1) nor (3,0); formula not reduced");
  }
  return {"8", {}};
}

void Solver::count_node(const std::string& tag, int r1, int r2, std::uint64_t depth) {
  ++stats_.nodes;
  stats_.records.push_back({tag, r1, r2});
  stats_.max_depth = std::max(stats_.max_depth, depth + 1);
  if (config_.node_limit != 0 && stats_.nodes > config_.node_limit) throw NodeLimitReached{};
}

std::optional<Assignment> Solver::search(const Formula& f, std::uint64_t depth) {
  CaseSelection sel = select_case(f, config_);
  ++stats_.case_hits[sel.tag];
  const std::string& tag = sel.tag;

  if (tag == "1") return std::nullopt;
  if (tag == "2") return Assignment{};
  if (tag == "3") {
    ++stats_.exhaustive_instances;
    return brute_force(f).model;
  }
  if (tag == "4") {
    Assignment merged;
    for (const Formula& part : components(f)) {
      auto m = search(part, depth);
      if (!m) return std::nullopt;
      merged.insert(m->begin(), m->end());
    }
    return merged;
  }
  if (tag == "8") {
    ++stats_.endgame_instances;
    return solve_degree2(f).model;
  }
  if ((tag == "6.1.1" || tag == "6.1.3") && sel.context.cut_literal) {
    auto cut = verify_cut(f, sel.context.cut_side, *sel.context.cut_literal);
    if (!cut) cut = verify_cut(f, sel.context.cut_side, *sel.context.cut_literal, /*require_same_sign=*/false);
    if (cut) return split(f, *cut, tag, depth);
    ++stats_.case_hits["cut-fallback"];
    return branch(f, *sel.context.x, "6.1.5", depth);
  }
  if (tag == "7" && config_.case7_shortcut) {
    std::set<Var> y1;
    for (Literal l : sel.context.y1) y1.insert(l.var());
    for (const auto& [id, c] : f.clauses()) {
      if (overlap(c, y1) == c.width()) {
        ++stats_.case_hits["7-forced"];
        return branch(f, *sel.context.x, tag, depth, /*skip_positive=*/true);
      }
    }
  }
  return branch(f, *sel.context.x, tag, depth);
}

std::optional<Assignment> Solver::branch(const Formula& f, Literal x, const std::string& tag, std::uint64_t depth,
                                         bool skip_positive) {
  const int m = static_cast<int>(f.num_clauses());
  struct Side {
    ReconstructionLog log;
    OmegaResult result;
    int removed;
  };
  std::vector<Side> sides;
  for (Literal lit : {x, ~x}) {
    if (skip_positive && lit == x) continue;
    Side s;
    s.result = omega(f, lit, s.log, config_.reduce);
    s.removed = s.result.conflict ? m : m - static_cast<int>(s.result.formula.num_clauses());
    sides.push_back(std::move(s));
  }
  if (sides.size() == 2) count_node(tag, sides[0].removed, sides[1].removed, depth);
  for (Side& s : sides) {
    if (s.result.conflict) continue;
    if (auto model = search(s.result.formula, depth + 1)) return s.log.replay(std::move(*model));
  }
  return std::nullopt;
}

std::optional<Assignment> Solver::split(const Formula& f, const CutSplit& cut, const std::string& tag,
                                        std::uint64_t depth) {
  const int m = static_cast<int>(f.num_clauses());
  struct Side {
    ReconstructionLog log1, log2;
    OmegaResult f1, f2;
    int removed;
  };
  std::vector<Side> sides;
  for (Literal lit : {cut.l, ~cut.l}) {
    Side s;
    s.f1 = omega(cut.f1, lit, s.log1, config_.reduce);
    s.f2 = cut.f2.mentions(lit.var()) ? omega(cut.f2, lit, s.log2, config_.reduce) : OmegaResult{cut.f2, false, {}};
    bool dead = s.f1.conflict || s.f2.conflict;
    s.removed = dead ? m : m - static_cast<int>(s.f2.formula.num_clauses());
    sides.push_back(std::move(s));
  }
  count_node(tag, sides[0].removed, sides[1].removed, depth);
  for (Side& s : sides) {
    if (s.f1.conflict || s.f2.conflict) continue;
    ++stats_.exhaustive_instances;
    auto m1 = brute_force(s.f1.formula).model;
    if (!m1) continue;
    auto m2 = search(s.f2.formula, depth + 1);
    if (!m2) continue;
    Assignment left = s.log1.replay(std::move(*m1));
    Assignment right = s.log2.replay(std::move(*m2));
    left.insert(right.begin(), right.end());
    return left;
  }
  return std::nullopt;
}

SolveResult Solver::finish(const Formula& f, std::optional<Assignment> model, bool aborted) {
  SolveResult out;
  out.stats = stats_;
  if (aborted) {
    out.decision = Decision::Aborted;
    return out;
  }
  if (!model) {
    out.decision = Decision::Unsatisfiable;
    return out;
  }
  for (Var v = 1; v <= f.declared_vars(); ++v) model->try_emplace(v, false);
  for (Var v : f.variables()) model->try_emplace(v, false);
  if (!evaluate_exact(f, *model)) throw InternalError("solver produced an assignment that is not a model");
  out.decision = Decision::Satisfiable;
  out.model = std::move(model);
  return out;
}

SolveResult Solver::solve(const Formula& f) {
  stats_ = {};
  ReconstructionLog log;
  try {
    Reduced r = reduce(f, log, config_.reduce);
    if (r.conflict) return finish(f, std::nullopt, false);
    auto model = search(r.formula, 0);
    if (model) model = log.replay(std::move(*model));
    return finish(f, std::move(model), false);
  } catch (const NodeLimitReached&) {
    return finish(f, std::nullopt, true);
  }
}

SolveResult Solver::branch_on(const Formula& f, Literal x) {
  stats_ = {};
  try {
    return finish(f, branch(f, x, "branch", 0), false);
  } catch (const NodeLimitReached&) {
    return finish(f, std::nullopt, true);
  }
}

SolveResult Solver::split_on_cut(const Formula& f, const CutSplit& cut) {
  stats_ = {};
  try {
    return finish(f, split(f, cut, "cut", 0), false);
  } catch (const NodeLimitReached&) {
    return finish(f, std::nullopt, true);
  }
}

SolveResult solve(const Formula& f, const SolverConfig& config) {
  Solver s(config);
  return s.solve(f);
}

} // namespace x3sat
