#include "x3sat/simplify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace x3sat {

namespace {

constexpr std::array<std::string_view, 17> kRuleNames = {
    "TR1", "TR2", "TR3", "TR4", "TR5", "TR6", "TR7", "TR8", "TR9",
    "TR10", "TR11", "TR12", "TR13", "TR14", "THM2", "THM3", "THM4",
};

bool is_triple(const Clause& c) { return c.width() == 3 && c.has_distinct_vars(); }

// Literals of `c` other than those at positions `skip`.
std::vector<Literal> rest_of(const Clause& c, std::initializer_list<Literal> skip) {
  std::vector<Literal> out;
  std::vector<bool> used(skip.size(), false);
  for (Literal l : c.literals) {
    bool skipped = false;
    std::size_t i = 0;
    for (Literal s : skip) {
      if (!used[i] && s == l) {
        used[i] = true;
        skipped = true;
        break;
      }
      ++i;
    }
    if (!skipped) out.push_back(l);
  }
  return out;
}

// Pattern literals must name pairwise different variables.
bool distinct_vars(std::initializer_list<Literal> ls) {
  for (auto i = ls.begin(); i != ls.end(); ++i)
    for (auto j = std::next(i); j != ls.end(); ++j)
      if (i->var() == j->var()) return false;
  return true;
}

std::vector<ClauseId> triples_with(const Formula& f, Literal l) {
  std::vector<ClauseId> ids;
  for (ClauseId id : f.clauses_with(l))
    if (is_triple(f.clause(id))) ids.push_back(id);
  return ids;
}

long long degree_square_delta(const Formula& f, const std::vector<Literal>& before, const std::vector<Literal>& after) {
  std::map<Var, int> delta;
  for (Literal l : before) --delta[l.var()];
  for (Literal l : after) ++delta[l.var()];
  long long total = 0;
  for (auto [v, d] : delta) {
    long long deg = f.degree(v);
    total += (deg + d) * (deg + d) - deg * deg;
  }
  return total;
}

using Accept = bool (*)(const Formula&, const TraceEntry&);

bool accept_any(const Formula&, const TraceEntry&) { return true; }

bool accept_if_degree_drops(const Formula& f, const TraceEntry& e) {
  for (const Edit& ed : e.edits) {
    if (auto r = std::get_if<ReplaceEdit>(&ed)) {
      if (degree_square_delta(f, f.clause(r->clause).literals, r->literals) >= 0) return false;
    }
  }
  return true;
}

// --- individual matchers ----------------------------------------------------

std::optional<TraceEntry> match_tr1(const Formula& f) {
  for (Var v : f.variables()) {
    auto pc = f.polarity_counts(v);
    if (pc.negative > pc.positive) return TraceEntry{RuleId::TR1, f.clauses_with(v), {FlipEdit{v}}};
  }
  return std::nullopt;
}

std::optional<TraceEntry> match_tr2(const Formula& f) {
  for (const auto& [id, c] : f.clauses())
    if (c.width() == 1) return TraceEntry{RuleId::TR2, {id}, {AssignEdit{{c.literals[0]}}}};
  return std::nullopt;
}

std::optional<TraceEntry> match_tr3(const Formula& f) {
  for (const auto& [id, c] : f.clauses()) {
    if (c.width() != 2) continue;
    Literal a = c.literals[0], b = c.literals[1];
    if (a == b) return TraceEntry{RuleId::TR3, {id}, {AssignEdit{{~a}}}};
    if (a == ~b) return TraceEntry{RuleId::TR3, {id}, {RemoveEdit{id}}};
    return TraceEntry{RuleId::TR3, {id}, {AliasEdit{a, ~b}, RemoveEdit{id}}};
  }
  return std::nullopt;
}

std::optional<TraceEntry> match_tr4(const Formula& f) {
  for (const auto& [id, c] : f.clauses())
    for (std::size_t i = 0; i < c.width(); ++i)
      for (std::size_t j = i + 1; j < c.width(); ++j)
        if (c.literals[i] == c.literals[j]) return TraceEntry{RuleId::TR4, {id}, {AssignEdit{{~c.literals[i]}}}};
  return std::nullopt;
}

std::optional<TraceEntry> match_tr5(const Formula& f) {
  for (const auto& [id, c] : f.clauses()) {
    if (c.width() != 3) continue;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j || c.literals[i] != ~c.literals[j]) continue;
        Literal y = c.literals[3 - i - j];
        if (y.var() != c.literals[i].var()) return TraceEntry{RuleId::TR5, {id}, {AssignEdit{{~y}}}};
      }
  }
  return std::nullopt;
}

std::optional<TraceEntry> match_tr6(const Formula& f) {
  for (const auto& [id, c] : f.clauses()) {
    if (!is_triple(c)) continue;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (f.is_singleton(c.literals[i].var()) && f.is_singleton(c.literals[j].var()))
          return TraceEntry{RuleId::TR6, {id}, {AssignEdit{{~c.literals[i]}}}};
  }
  return std::nullopt;
}

// Pairs (C1 < C2) of 3-clauses sharing at least two variables.
template <class Fn>
std::optional<TraceEntry> scan_overlapping_pairs(const Formula& f, Fn&& fn) {
  for (const auto& [id1, c1] : f.clauses()) {
    if (!is_triple(c1)) continue;
    std::set<ClauseId> seen;
    for (Literal l : c1.literals)
      for (ClauseId id2 : f.clauses_with(l.var())) {
        if (id2 <= id1 || !seen.insert(id2).second) continue;
        const Clause& c2 = f.clause(id2);
        if (!is_triple(c2)) continue;
        int shared = 0;
        for (Literal a : c1.literals) shared += c2.mentions(a.var()) ? 1 : 0;
        if (shared < 2) continue;
        if (auto e = fn(c1, c2)) return e;
      }
  }
  return std::nullopt;
}

std::optional<TraceEntry> match_tr7(const Formula& f) {
  return scan_overlapping_pairs(f, [](const Clause& c1, const Clause& c2) -> std::optional<TraceEntry> {
    for (Literal x : c1.literals) {
      if (!c2.contains(x)) continue;
      for (Literal y : c1.literals)
        if (y != x && c2.contains(~y)) return TraceEntry{RuleId::TR7, {c1.id, c2.id}, {AssignEdit{{~x}}}};
    }
    return std::nullopt;
  });
}

std::optional<TraceEntry> match_tr8(const Formula& f) {
  return scan_overlapping_pairs(f, [](const Clause& c1, const Clause& c2) -> std::optional<TraceEntry> {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        Literal x = c1.literals[i], y = c1.literals[j];
        if (c2.contains(~x) && c2.contains(~y)) return TraceEntry{RuleId::TR8, {c1.id, c2.id}, {AliasEdit{y, ~x}}};
      }
    return std::nullopt;
  });
}

std::optional<TraceEntry> match_tr13(const Formula& f) {
  return scan_overlapping_pairs(f, [](const Clause& c1, const Clause& c2) -> std::optional<TraceEntry> {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        Literal x1 = c1.literals[i], y1 = c1.literals[j];
        if (!c2.contains(x1) || !c2.contains(y1)) continue;
        Literal z1 = rest_of(c1, {x1, y1}).front();
        Literal z2 = rest_of(c2, {x1, y1}).front();
        return TraceEntry{RuleId::TR13, {c1.id, c2.id}, {ReplaceEdit{c2.id, {~z1, z2}}}};
      }
    return std::nullopt;
  });
}

// C1 = x1 y1 y2, C2 = x2 y2 y3, C3 = x3 ~y3 y1  ==>  C3 <- ~x1 x2 x3
std::optional<TraceEntry> match_tr9(const Formula& f, Accept accept) {
  for (const auto& [id3, c3] : f.clauses()) {
    if (!is_triple(c3)) continue;
    for (Literal neg_y3 : c3.literals)
      for (Literal y1 : c3.literals) {
        if (neg_y3 == y1) continue;
        Literal x3 = rest_of(c3, {neg_y3, y1}).front();
        Literal y3 = ~neg_y3;
        for (ClauseId id2 : triples_with(f, y3)) {
          if (id2 == id3) continue;
          const Clause& c2 = f.clause(id2);
          for (Literal y2 : rest_of(c2, {y3})) {
            Literal x2 = rest_of(c2, {y3, y2}).front();
            for (ClauseId id1 : triples_with(f, y1)) {
              if (id1 == id2 || id1 == id3) continue;
              const Clause& c1 = f.clause(id1);
              if (!c1.contains(y2) || y2 == y1) continue;
              Literal x1 = rest_of(c1, {y1, y2}).front();
              TraceEntry e{RuleId::TR9, {id1, id2, id3}, {ReplaceEdit{id3, {~x1, x2, x3}}}};
              if (accept(f, e)) return e;
            }
          }
        }
      }
  }
  return std::nullopt;
}

// Cycle C_i = x_i ~y_i y_{i+1}. Edge y -> y' for every clause holding ~y and y'.
std::optional<TraceEntry> match_tr10(const Formula& f) {
  struct Arc {
    Literal to;
    ClauseId clause;
    Literal x;
  };
  std::map<Literal, std::vector<Arc>> arcs;
  for (const auto& [id, c] : f.clauses()) {
    if (!is_triple(c)) continue;
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = 0; q < 3; ++q) {
        if (p == q) continue;
        arcs[~c.literals[p]].push_back({c.literals[q], id, c.literals[3 - p - q]});
      }
  }
  for (auto& [node, out] : arcs)
    std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) {
      return std::tie(a.to, a.clause) < std::tie(b.to, b.clause);
    });

  enum class Mark { White, Grey, Black };
  std::map<Literal, Mark> mark;
  for (const auto& [start, unused] : arcs) {
    if (mark[start] != Mark::White) continue;
    // Iterative DFS; path holds (node, next arc index, arc used to enter next).
    struct Frame {
      Literal node;
      std::size_t next;
    };
    std::vector<Frame> stack{{start, 0}};
    std::vector<Arc> path;
    mark[start] = Mark::Grey;
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto it = arcs.find(top.node);
      if (it == arcs.end() || top.next >= it->second.size()) {
        mark[top.node] = Mark::Black;
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      Arc a = it->second[top.next++];
      Mark m = mark[a.to];
      if (m == Mark::Grey) {
        // Cycle: from the frame holding a.to to the top, closed by arc a.
        std::size_t k = 0;
        while (stack[k].node != a.to) ++k;
        std::vector<Arc> cycle(path.begin() + static_cast<long>(k), path.end());
        cycle.push_back(a);
        TraceEntry e{RuleId::TR10, {}, {}};
        AssignEdit assign;
        for (const Arc& c : cycle) {
          e.clauses.push_back(c.clause);
          assign.literals.push_back(~c.x);
        }
        e.edits.push_back(std::move(assign));
        return e;
      }
      if (m == Mark::White) {
        mark[a.to] = Mark::Grey;
        path.push_back(a);
        stack.push_back({a.to, 0});
      }
    }
  }
  return std::nullopt;
}

// C1 = x1 y1 y2 (x1 singleton), C2 = x2 y2 y3, C3 = x3 ~y3 y1  ==>  F / C1
std::optional<TraceEntry> match_tr11(const Formula& f) {
  for (const auto& [id1, c1] : f.clauses()) {
    if (!is_triple(c1)) continue;
    for (Literal x1 : c1.literals) {
      if (!f.is_singleton(x1.var())) continue;
      auto ys = rest_of(c1, {x1});
      for (int order = 0; order < 2; ++order) {
        Literal y1 = ys[order], y2 = ys[1 - order];
        for (ClauseId id3 : triples_with(f, y1)) {
          if (id3 == id1) continue;
          const Clause& c3 = f.clause(id3);
          for (Literal neg_y3 : rest_of(c3, {y1})) {
            for (ClauseId id2 : triples_with(f, ~neg_y3)) {
              if (id2 == id1 || id2 == id3 || !f.clause(id2).contains(y2)) continue;
              if (!distinct_vars({x1, y1, y2, neg_y3})) continue;
              return TraceEntry{RuleId::TR11, {id1, id2, id3},
                                {DefineEdit{Exclusive{x1, {y1, y2}}}, RemoveEdit{id1}}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// C1 = x1 y1 y2, C2 = x2 y2 y3, C3 = x3 y3 y1 (x3 singleton)  ==>  C3 <- ~x1 y3 x3
std::optional<TraceEntry> match_tr12(const Formula& f, Accept accept) {
  for (const auto& [id3, c3] : f.clauses()) {
    if (!is_triple(c3)) continue;
    for (Literal x3 : c3.literals) {
      if (!f.is_singleton(x3.var())) continue;
      auto ys = rest_of(c3, {x3});
      for (int order = 0; order < 2; ++order) {
        Literal y3 = ys[order], y1 = ys[1 - order];
        for (ClauseId id1 : triples_with(f, y1)) {
          if (id1 == id3) continue;
          const Clause& c1 = f.clause(id1);
          for (Literal y2 : rest_of(c1, {y1})) {
            Literal x1 = rest_of(c1, {y1, y2}).front();
            for (ClauseId id2 : triples_with(f, y2)) {
              if (id2 == id1 || id2 == id3 || !f.clause(id2).contains(y3)) continue;
              if (!distinct_vars({x1, x3, y1, y2, y3})) continue;
              TraceEntry e{RuleId::TR12, {id1, id2, id3},
                           {ReplaceEdit{id3, {~x1, y3, x3}}, DefineEdit{Exclusive{x3, {y3, y1}}}}};
              if (accept(f, e)) return e;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Monotone non-singleton x whose every clause carries a singleton: x <- false.
std::optional<TraceEntry> match_tr14(const Formula& f) {
  for (Var v : f.variables()) {
    auto pc = f.polarity_counts(v);
    if (pc.degree() < 2 || (pc.positive > 0 && pc.negative > 0)) continue;
    Literal x(v, pc.negative > 0);
    auto ids = f.clauses_with(x);
    bool all = true;
    for (ClauseId id : ids) {
      const Clause& c = f.clause(id);
      bool has = false;
      for (Literal u : c.literals) has = has || (u.var() != v && f.is_singleton(u.var()));
      all = all && has;
    }
    if (all) return TraceEntry{RuleId::TR14, ids, {AssignEdit{{~x}}}};
  }
  return std::nullopt;
}

std::vector<Literal> literals_in_order(const Formula& f) {
  std::vector<Literal> out;
  for (Var v : f.variables()) {
    out.push_back(Literal::positive(v));
    out.push_back(Literal::negative(v));
  }
  return out;
}

// C1 = x y1 y2, C2 = x y3 y4, C3 = ~y1 y3 z1, y1 a (1,1)-literal
//   ==>  (C1 & C3) <- ~y4 y2 z1
std::optional<TraceEntry> match_thm2(const Formula& f) {
  for (Literal x : literals_in_order(f)) {
    auto xs = triples_with(f, x);
    for (ClauseId id1 : xs)
      for (ClauseId id2 : xs) {
        if (id1 == id2) continue;
        const Clause& c1 = f.clause(id1);
        const Clause& c2 = f.clause(id2);
        for (Literal y1 : rest_of(c1, {x})) {
          if (f.count(y1) != 1 || f.count(~y1) != 1) continue;
          Literal y2 = rest_of(c1, {x, y1}).front();
          ClauseId id3 = f.clauses_with(~y1).front();
          if (id3 == id1 || id3 == id2 || !is_triple(f.clause(id3))) continue;
          const Clause& c3 = f.clause(id3);
          for (Literal y3 : rest_of(c2, {x})) {
            if (!c3.contains(y3)) continue;
            Literal y4 = rest_of(c2, {x, y3}).front();
            Literal z1 = rest_of(c3, {~y1, y3}).front();
            if (!distinct_vars({x, y1, y2, y3, y4, z1})) continue;
            return TraceEntry{RuleId::THM2, {id1, id2, id3},
                              {DefineEdit{Exclusive{y1, {x, y2}}}, RemoveEdit{id1}, ReplaceEdit{id3, {~y4, y2, z1}}}};
          }
        }
      }
  }
  return std::nullopt;
}

// (2,1)-literal x: C2 = x y3 y4, C3 = ~x y'1 y'2, extra clause y'1 y3 z1
//   ==>  C3 <- ~z1 y4 y'2
std::optional<TraceEntry> match_thm3(const Formula& f, Accept accept) {
  for (Literal x : literals_in_order(f)) {
    if (f.count(x) != 2 || f.count(~x) != 1) continue;
    ClauseId id3 = f.clauses_with(~x).front();
    const Clause& c3 = f.clause(id3);
    if (!is_triple(c3)) continue;
    for (ClauseId id2 : triples_with(f, x)) {
      if (id2 == id3) continue;
      const Clause& c2 = f.clause(id2);
      for (Literal y3 : rest_of(c2, {x})) {
        Literal y4 = rest_of(c2, {x, y3}).front();
        for (Literal yp1 : rest_of(c3, {~x})) {
          Literal yp2 = rest_of(c3, {~x, yp1}).front();
          for (ClauseId idc : triples_with(f, yp1)) {
            if (idc == id2 || idc == id3 || !f.clause(idc).contains(y3)) continue;
            if (!distinct_vars({x, y3, y4, yp1, yp2})) continue;
            Literal z1 = rest_of(f.clause(idc), {yp1, y3}).front();
            if (!distinct_vars({x, y3, y4, yp1, yp2, z1})) continue;
            TraceEntry e{RuleId::THM3, {id2, id3, idc}, {ReplaceEdit{id3, {~z1, y4, yp2}}}};
            if (accept(f, e)) return e;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// (3,0)-literal x: C1 = x y1 y2, C2 = x y3 y4 (y4 singleton), clause y1 y3 z1
//   ==>  C2 <- ~y2 y3 y4
std::optional<TraceEntry> match_thm4(const Formula& f, Accept accept) {
  for (Literal x : literals_in_order(f)) {
    if (f.count(x) != 3 || f.count(~x) != 0) continue;
    auto xs = triples_with(f, x);
    for (ClauseId id1 : xs)
      for (ClauseId id2 : xs) {
        if (id1 == id2) continue;
        const Clause& c1 = f.clause(id1);
        const Clause& c2 = f.clause(id2);
        for (Literal y4 : rest_of(c2, {x})) {
          if (!f.is_singleton(y4.var())) continue;
          Literal y3 = rest_of(c2, {x, y4}).front();
          for (Literal y1 : rest_of(c1, {x})) {
            Literal y2 = rest_of(c1, {x, y1}).front();
            for (ClauseId idc : triples_with(f, y1)) {
              if (idc == id1 || idc == id2 || !f.clause(idc).contains(y3)) continue;
              if (!distinct_vars({x, y1, y2, y3, y4})) continue;
              Literal z1 = rest_of(f.clause(idc), {y1, y3}).front();
              if (!distinct_vars({x, y1, y2, y3, y4, z1})) continue;
              TraceEntry e{RuleId::THM4, {id1, id2, idc},
                           {ReplaceEdit{id2, {~y2, y3, y4}}, DefineEdit{Exclusive{y4, {y3, x}}}}};
              if (accept(f, e)) return e;
            }
          }
        }
      }
  }
  return std::nullopt;
}

struct Measure {
  std::size_t clauses, literals, vars;
  long long degree_squares;
  std::size_t negatives;
  friend auto operator<=>(const Measure&, const Measure&) = default;
};

Measure measure(const Formula& f) {
  Measure m{f.num_clauses(), f.num_literals(), f.num_vars(), 0, 0};
  for (Var v : f.variables()) {
    auto pc = f.polarity_counts(v);
    m.degree_squares += static_cast<long long>(pc.degree()) * pc.degree();
    m.negatives += static_cast<std::size_t>(pc.negative);
  }
  return m;
}

} // namespace

std::string_view to_string(RuleId r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<RuleId> parse_rule_id(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return static_cast<RuleId>(i);
  return std::nullopt;
}

bool is_equal_size_rewrite(RuleId r) {
  return r == RuleId::TR9 || r == RuleId::TR12 || r == RuleId::THM3 || r == RuleId::THM4;
}

std::string describe(const TraceEntry& e) {
  std::ostringstream os;
  os << to_string(e.rule) << " [";
  for (std::size_t i = 0; i < e.clauses.size(); ++i) os << (i ? " " : "") << 'C' << e.clauses[i];
  os << "]";
  auto lits = [&](const std::vector<Literal>& ls) {
    os << '(';
    for (std::size_t i = 0; i < ls.size(); ++i) os << (i ? " " : "") << ls[i];
    os << ')';
  };
  for (const Edit& ed : e.edits) {
    os << ' ';
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, AssignEdit>) {
            os << "true";
            lits(x.literals);
          } else if constexpr (std::is_same_v<T, AliasEdit>) {
            os << x.target << "<-" << x.replacement;
          } else if constexpr (std::is_same_v<T, FlipEdit>) {
            os << "flip " << x.var;
          } else if constexpr (std::is_same_v<T, ReplaceEdit>) {
            os << 'C' << x.clause << "<-";
            lits(x.literals);
          } else if constexpr (std::is_same_v<T, RemoveEdit>) {
            os << "drop C" << x.clause;
          } else {
            os << "def " << x.record.literal << ":=none";
            lits(x.record.others);
          }
        },
        ed);
  }
  return os.str();
}

bool apply_edits(Formula& f, const std::vector<Edit>& edits, ReconstructionLog& log) {
  for (const Edit& ed : edits) {
    bool ok = std::visit(
        [&](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, AssignEdit>) {
            std::vector<Literal> falses;
            for (Literal l : x.literals) falses.push_back(~l);
            return substitute_false(f, falses, log) != SubstOutcome::Conflict;
          } else if constexpr (std::is_same_v<T, AliasEdit>) {
            substitute_literal(f, x.target, x.replacement, log);
            return true;
          } else if constexpr (std::is_same_v<T, FlipEdit>) {
            flip_variable(f, x.var, log);
            return true;
          } else if constexpr (std::is_same_v<T, ReplaceEdit>) {
            std::vector<Literal> old = f.clause(x.clause).literals;
            substitute_clause(f, x.clause, x.literals);
            for (Literal l : old)
              if (!f.mentions(l.var())) log.free(l.var());
            return true;
          } else if constexpr (std::is_same_v<T, RemoveEdit>) {
            std::vector<Literal> old = f.clause(x.clause).literals;
            f.remove_clause(x.clause);
            std::set<Var> gone;
            for (Literal l : old)
              if (!f.mentions(l.var()) && gone.insert(l.var()).second) log.free(l.var());
            return true;
          } else {
            log.exclusive(x.record.literal, x.record.others);
            return true;
          }
        },
        ed);
    if (!ok) return false;
  }
  return true;
}

std::optional<TraceEntry> match_rule(const Formula& f, RuleId r, bool require_progress) {
  Accept accept = require_progress ? accept_if_degree_drops : accept_any;
  switch (r) {
    case RuleId::TR1: return match_tr1(f);
    case RuleId::TR2: return match_tr2(f);
    case RuleId::TR3: return match_tr3(f);
    case RuleId::TR4: return match_tr4(f);
    case RuleId::TR5: return match_tr5(f);
    case RuleId::TR6: return match_tr6(f);
    case RuleId::TR7: return match_tr7(f);
    case RuleId::TR8: return match_tr8(f);
    case RuleId::TR9: return match_tr9(f, accept);
    case RuleId::TR10: return match_tr10(f);
    case RuleId::TR11: return match_tr11(f);
    case RuleId::TR12: return match_tr12(f, accept);
    case RuleId::TR13: return match_tr13(f);
    case RuleId::TR14: return match_tr14(f);
    case RuleId::THM2: return match_thm2(f);
    case RuleId::THM3: return match_thm3(f, accept);
    case RuleId::THM4: return match_thm4(f, accept);
  }
  return std::nullopt;
}

std::optional<RuleApplication> apply_rule(const Formula& f, RuleId r, ReconstructionLog& log) {
  auto e = match_rule(f, r);
  if (!e) return std::nullopt;
  RuleApplication app{f, std::move(*e), false};
  app.conflict = !apply_edits(app.formula, app.entry.edits, log);
  return app;
}

std::optional<RuleApplication> apply_derived(const Formula& f, RuleId r, ReconstructionLog& log) {
  if (r != RuleId::THM2 && r != RuleId::THM3 && r != RuleId::THM4)
    throw std::invalid_argument("apply_derived expects THM2, THM3 or THM4");
  return apply_rule(f, r, log);
}

Reduced reduce(Formula f, ReconstructionLog& log, const ReduceOptions& options) {
  Reduced out{std::move(f), {}, false};
  if (out.formula.has_empty_clause()) {
    out.conflict = true;
    return out;
  }
  for (;;) {
    Measure before = measure(out.formula);
    bool fired = false;
    for (RuleId r : kReduceOrder) {
      if (options.disabled.contains(r)) continue;
      auto e = match_rule(out.formula, r, /*require_progress=*/true);
      if (!e) continue;
      bool ok = apply_edits(out.formula, e->edits, log);
      out.trace.push_back(std::move(*e));
      if (!ok) {
        out.conflict = true;
        return out;
      }
      if (!(measure(out.formula) < before))
        throw InternalError("reduce: " + describe(out.trace.back()) + " did not lower the termination measure");
      fired = true;
      break;
    }
    if (!fired) break;
  }
  return out;
}

Reduced replay_trace(Formula original, const RewriteTrace& trace, ReconstructionLog& log) {
  Reduced out{std::move(original), {}, false};
  for (const TraceEntry& e : trace) {
    out.trace.push_back(e);
    if (!apply_edits(out.formula, e.edits, log)) {
      out.conflict = true;
      break;
    }
  }
  return out;
}

std::vector<Violation> assert_simplified(const Formula& f) {
  std::vector<Violation> out;
  for (const auto& [id, c] : f.clauses()) {
    if (c.width() == 0) out.push_back({"empty clause", {id}, {}});
    if (c.width() == 1) out.push_back({"1-clause", {id}, {}});
    if (c.width() == 2) out.push_back({"2-clause", {id}, {}});
    int singletons = 0;
    for (Literal l : c.literals) singletons += f.is_singleton(l.var()) ? 1 : 0;
    if (singletons > 1) out.push_back({"more than one singleton", {id}, {}});
  }
  for (const auto& [id1, c1] : f.clauses()) {
    std::set<ClauseId> seen;
    for (Literal l : c1.literals)
      for (ClauseId id2 : f.clauses_with(l.var())) {
        if (id2 <= id1 || !seen.insert(id2).second) continue;
        std::set<Var> shared;
        for (Literal a : c1.literals)
          if (f.clause(id2).mentions(a.var())) shared.insert(a.var());
        if (shared.size() > 1) out.push_back({"two common variables", {id1, id2}, {}});
      }
  }
  for (Literal x : literals_in_order(f)) {
    int a = f.count(x), j = f.count(~x);
    if (a == 0 || j > 1 || a + j < 2) continue;
    bool some_clean = false;
    for (ClauseId id : f.clauses_with(x)) {
      bool clean = true;
      for (Literal u : f.clause(id).literals) clean = clean && !f.is_singleton(u.var());
      some_clean = some_clean || clean;
    }
    if (!some_clean) out.push_back({"literal only in clauses with singletons", f.clauses_with(x), x});
  }
  return out;
}

} // namespace x3sat
