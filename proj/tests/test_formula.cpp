#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "x3sat/dimacs.hpp"
#include "x3sat/formula.hpp"

using namespace x3sat;

namespace {

Formula fig1() { return Formula::from_dimacs({{1, 2, 3}, {1, 4, 5}, {-1, 6, 7}}); }

std::vector<std::vector<int>> as_ints(const Formula& f) {
  std::vector<std::vector<int>> out;
  for (const auto& [id, c] : f.clauses()) {
    std::vector<int> lits;
    for (Literal l : c.literals) lits.push_back(l.dimacs());
    out.push_back(lits);
  }
  return out;
}

} // namespace

TEST_CASE("literal complement and ordering") {
  Literal x = Literal::positive(3);
  CHECK((~~x) == x);
  CHECK((~x).negated());
  CHECK((~x).var() == 3);
  CHECK(Literal::from_dimacs(-4).dimacs() == -4);
  CHECK(Literal::positive(2) < Literal::negative(2));
  CHECK(Literal::negative(2) < Literal::positive(3));
  CHECK(x.holds(true));
  CHECK_FALSE((~x).holds(true));
}

TEST_CASE("parse: direct transcription") {
  Formula f = parse_dimacs("p x3sat 3 1\n1 2 3 0\n");
  REQUIRE(f.num_clauses() == 1);
  CHECK(as_ints(f) == std::vector<std::vector<int>>{{1, 2, 3}});

  Formula g = parse_dimacs("c comment\np x3sat 2 1\n1 -2 0\n");
  CHECK(as_ints(g) == std::vector<std::vector<int>>{{1, -2}});
}

TEST_CASE("parse: errors carry line numbers") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("p x3sat 1 1\n1 1 1 1 0\n") == 2);
  CHECK(line_of("p x3sat 2 1\n1 2\n") == 2);
  CHECK(line_of("p x3sat 2 1\n1 3 0\n") == 2);
  CHECK(line_of("p x3sat two 1\n") == 1);
  CHECK(line_of("1 2 0\n") == 1);
  CHECK(line_of("p x3sat 3 2\n1 2 3 0\n") == 2);
  CHECK(line_of("p x3sat 3 1\n1 0 2 0\n") == 2);
  CHECK(line_of("p x3sat 3 1\n0\n") == 2);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 3 0\n"), ParseError);
  CHECK(parse_dimacs("p cnf 3 1\n1 2 3 0\n", HeaderFormat::AcceptCnf).num_clauses() == 1);
}

TEST_CASE("parse keeps duplicate clauses") {
  Formula f = parse_dimacs("p x3sat 3 2\n1 2 3 0\n1 2 3 0\n");
  CHECK(f.num_clauses() == 2);
}

TEST_CASE("serialize round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Formula f = testing::random_formula(rng, 6, 1 + i % 9, true);
    Formula g = parse_dimacs(serialize_dimacs(f));
    REQUIRE(g.num_clauses() == f.num_clauses());
    auto a = f.clauses().begin();
    for (const auto& [id, c] : g.clauses()) {
      auto x = a->second.literals, y = c.literals;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      CHECK(x == y);
      ++a;
    }
    CHECK(serialize_dimacs(g) == serialize_dimacs(f));
  }
}

TEST_CASE("model line format") {
  Assignment a{{1, true}, {3, false}};
  CHECK(format_model(a, 3) == "v 1 -2 -3 0");
}

TEST_CASE("polarity counts") {
  Formula f = fig1();
  CHECK(polarity_counts(f, 1) == PolarityCounts{2, 1});
  CHECK(f.degree(1) == 3);
  CHECK(f.max_degree() == 3);
  Formula g = Formula::from_dimacs({{1, 2, 3}});
  CHECK(polarity_counts(g, 1) == PolarityCounts{1, 0});
  Formula empty;
  CHECK(polarity_counts(empty, 1) == PolarityCounts{0, 0});
}

TEST_CASE("substitute literal by false deletes it") {
  Formula f = Formula::from_dimacs({{1, 2, 3}});
  ReconstructionLog log;
  // x <- false on a lone clause leaves y, z in exactly-one: x is bound false.
  Formula g = f;
  g.replace_clause(0, {Literal::positive(2), Literal::positive(3)});
  CHECK(substitute_false(f, Literal::positive(1), log) == SubstOutcome::Applied);
  CHECK(f == g);
  REQUIRE(log.size() == 1);
  CHECK(std::get<Bind>(log.records()[0]).value == false);
}

TEST_CASE("substitute literal by literal rewrites both polarities") {
  Formula f = Formula::from_dimacs({{1, 2, 3}, {-1, 4, 5}});
  ReconstructionLog log;
  REQUIRE(substitute_literal(f, Literal::positive(1), Literal::negative(2), log) == SubstOutcome::Applied);
  CHECK(as_ints(f) == std::vector<std::vector<int>>{{-2, 2, 3}, {2, 4, 5}});
  Assignment back = log.replay({{2, true}});
  CHECK(back.at(1) == false);
  CHECK_THROWS_AS(substitute_literal(f, Literal::positive(2), Literal::negative(2), log), std::invalid_argument);
  CHECK(substitute_literal(f, Literal::positive(9), Literal::positive(2), log) == SubstOutcome::Absent);
}

TEST_CASE("substitute clause keeps id") {
  Formula f = Formula::from_dimacs({{1, 2, 3}});
  CHECK(substitute_clause(f, 0, {Literal::negative(4), Literal::positive(5)}) == SubstOutcome::Applied);
  CHECK(as_ints(f) == std::vector<std::vector<int>>{{-4, 5}});
  CHECK(f.has_clause(0));
  CHECK(substitute_clause(f, 7, {}) == SubstOutcome::Absent);
}

TEST_CASE("remove clauses") {
  Formula f = Formula::from_dimacs({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  std::vector<ClauseId> two{0, 2};
  remove(f, two);
  CHECK(f.num_clauses() == 1);
  CHECK(f.has_clause(1));
  std::vector<ClauseId> last{1};
  remove(f, last);
  CHECK(f.empty());
  CHECK(f.num_vars() == 0);
  std::vector<ClauseId> missing{5};
  CHECK_THROWS_AS(remove(f, missing), std::invalid_argument);
}

TEST_CASE("evaluate exact") {
  Formula f = Formula::from_dimacs({{1, 2, 3}});
  CHECK(evaluate_exact(f, {{1, true}, {2, false}, {3, false}}));
  CHECK_FALSE(evaluate_exact(f, {{1, true}, {2, true}, {3, false}}));
  Formula g = Formula::from_dimacs({{1, 2, 3}, {-1, 2, 3}});
  for (int mask = 0; mask < 8; ++mask)
    CHECK_FALSE(evaluate_exact(g, {{1, (mask & 1) != 0}, {2, (mask & 2) != 0}, {3, (mask & 4) != 0}}));
  try {
    evaluate_exact(f, {{1, true}});
    FAIL("expected PartialAssignmentError");
  } catch (const PartialAssignmentError& e) {
    CHECK(e.missing() == std::vector<Var>{2, 3});
  }
}

TEST_CASE("number of connected clauses") {
  Formula f = fig1();
  CHECK(num_connected_clauses(f, Literal::positive(1)) == 2);
  f.add_clause({Literal::positive(2), Literal::positive(8), Literal::positive(9)});
  CHECK(num_connected_clauses(f, Literal::positive(1)) == 3);
  Formula g = Formula::from_dimacs({{1, 2, 3}, {1, 4, 5}, {6, 7, 8}});
  CHECK(num_connected_clauses(g, Literal::positive(1)) == 2);
}

TEST_CASE("propagating assignment") {
  Formula f = Formula::from_dimacs({{1, 2, 3}, {-1, 4, 5}, {2, 6, 7}});
  ReconstructionLog log;
  REQUIRE(assign_true(f, Literal::positive(1), log) == SubstOutcome::Applied);
  // C0 satisfied, 2 and 3 forced false; C1 loses -1; C2 loses 2.
  CHECK(as_ints(f) == std::vector<std::vector<int>>{{4, 5}, {6, 7}});

  Formula g = Formula::from_dimacs({{1, 2, 3}, {1, -2, 4}});
  ReconstructionLog log2;
  CHECK(assign_true(g, Literal::positive(1), log2) == SubstOutcome::Conflict);

  Formula h = Formula::from_dimacs({{1, 2}});
  ReconstructionLog log3;
  CHECK(substitute_false(h, Literal::positive(5), log3) == SubstOutcome::Absent);
}

TEST_CASE("index stays coherent under random edits") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    Formula f = testing::random_formula(rng, 7, 8, true);
    ReconstructionLog log;
    for (int step = 0; step < 6 && !f.empty(); ++step) {
      auto vars = f.variables();
      Var v = vars[rng() % vars.size()];
      switch (rng() % 4) {
        case 0: substitute_false(f, Literal(v, rng() % 2 == 0), log); break;
        case 1: {
          Var w = vars[rng() % vars.size()];
          if (w != v) substitute_literal(f, Literal::positive(v), Literal(w, rng() % 2 == 0), log);
          break;
        }
        case 2: flip_variable(f, v, log); break;
        default: {
          std::vector<ClauseId> one{f.clauses().begin()->first};
          remove(f, one);
        }
      }
      REQUIRE(f.check_index().empty());
      for (Var u : f.variables()) CHECK(f.polarity_counts(u).degree() == f.degree(u));
    }
  }
}

TEST_CASE("log replay: free respects later assignments, exclusive overrides") {
  ReconstructionLog log;
  log.free(1, false);
  log.bind(2, true);
  Assignment a = log.replay({{1, true}});
  CHECK(a.at(1) == true);
  CHECK(a.at(2) == true);

  ReconstructionLog ex;
  ex.exclusive(Literal::positive(3), {Literal::positive(4), Literal::negative(5)});
  CHECK(ex.replay({{4, false}, {5, true}}).at(3) == true);
  CHECK(ex.replay({{4, true}, {5, true}}).at(3) == false);
  CHECK(ex.replay({{4, false}, {5, false}}).at(3) == false);
}
