#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "x3sat/analysis.hpp"
#include "x3sat/branch.hpp"
#include "x3sat/generate.hpp"

using namespace x3sat;

namespace {

void check_model(const Formula& f, const SolveResult& r) {
  REQUIRE(r.decision != Decision::Aborted);
  if (r.decision == Decision::Satisfiable) {
    REQUIRE(r.model);
    CHECK(evaluate_exact(f, *r.model));
  }
}

void check_against_oracle(const Formula& f, const SolveResult& r) {
  REQUIRE(r.decision != Decision::Aborted);
  bool expected = testing::oracle_sat(f);
  CHECK((r.decision == Decision::Satisfiable) == expected);
  if (r.decision == Decision::Satisfiable) {
    REQUIRE(r.model);
    CHECK(evaluate_exact(f, *r.model));
  }
}

// Small enough for the oracle.
std::vector<Formula> oracle_corpus() {
  std::vector<Formula> out;
  for (int n : {12, 16, 20})
    for (int m : {12, 16, 20, 30})
      for (double neg : {0.0, 0.25, 0.5})
        for (std::uint64_t seed = 0; seed < 25; ++seed) out.push_back(gen_random({n, m, seed, neg, std::nullopt, false}));
  return out;
}

// Sparse positive-leaning instances survive reduction and reach the branching
// cases; too many variables for the oracle.
std::vector<Formula> branching_corpus() {
  std::vector<Formula> out;
  for (int n : {30, 40})
    for (int m : {16, 20, 30})
      for (double neg : {0.0, 0.25})
        for (std::uint64_t seed = 0; seed < 30; ++seed) out.push_back(gen_random({n, m, seed, neg, std::nullopt, false}));
  return out;
}

const Formula kCase5 = Formula::from_dimacs({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {1, 8, 9}, {1, 10, 11}, {2, 4, 12}});
const Formula kCase611 = Formula::from_dimacs({{1, 2, 3}, {1, 4, 5}, {-1, 6, 7}, {-2, -4, 8}, {-6, 9, 10}, {9, 11, 12}});
const Formula kCase7 = Formula::from_dimacs({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {3, 8, 9}, {5, 8, 10}, {7, 9, 10}});
const Formula kCase8 = Formula::from_dimacs({{1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {7, 8, 9}, {9, 10, 11}, {11, 12, 1}});

} // namespace

TEST_CASE("solve examples") {
  SolveResult empty = solve(Formula{});
  CHECK(empty.decision == Decision::Satisfiable);

  Formula with_empty;
  with_empty.add_clause({});
  CHECK(solve(with_empty).decision == Decision::Unsatisfiable);

  CHECK(solve(Formula::from_dimacs({{1, 2, 3}, {-1, 2, 3}})).decision == Decision::Unsatisfiable);

  Formula declared(5);
  declared.add_clause({Literal::positive(1), Literal::positive(2), Literal::positive(3)});
  SolveResult r = solve(declared);
  REQUIRE(r.model);
  for (Var v = 1; v <= 5; ++v) CHECK(r.model->contains(v));
  CHECK(to_string(Decision::Aborted) == "aborted");
}

TEST_CASE("select_case examples") {
  CaseSelection five = select_case(kCase5);
  CHECK(five.tag == "5");
  REQUIRE(five.context.x);
  CHECK(five.context.x->var() == 1);
  CHECK(kCase5.degree(1) == 5);

  CaseSelection six = select_case(kCase611);
  CHECK(six.tag == "6.1.1");
  REQUIRE(six.context.cut_literal);
  CHECK(six.context.cut_literal->var() == 6);
  CHECK(six.context.cut_side.size() == 4);
  CHECK(six.context.connecting.size() == 2);

  CHECK(select_case(kCase7).tag == "7");
  CHECK(select_case(kCase8).tag == "8");

  Formula split = Formula::from_dimacs({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}, {13, 14, 15}, {16, 17, 18}});
  CHECK(select_case(split).tag == "4");
  SolverConfig whole;
  whole.decompose = false;
  CHECK(select_case(split, whole).tag == "8");
}

TEST_CASE("select_case is total on reduced formulas") {
  for (const Formula& f : branching_corpus()) {
    ReconstructionLog log;
    Reduced r = reduce(f, log);
    if (r.conflict) continue;
    CHECK_NOTHROW(select_case(r.formula));
  }
}

TEST_CASE("branch_on examples") {
  Solver s;
  SolveResult one = s.branch_on(Formula::from_dimacs({{1, 2, 3}}), Literal::positive(1));
  CHECK(one.decision == Decision::Satisfiable);
  CHECK(one.stats.nodes == 1);

  Solver s5;
  SolveResult r = s5.branch_on(kCase5, Literal::positive(1));
  check_against_oracle(kCase5, r);
  REQUIRE_FALSE(r.stats.records.empty());
  CHECK(r.stats.records[0].r1 >= 4);
  CHECK(r.stats.records[0].r2 >= 1);

  Formula unsat = Formula::from_dimacs({{1, 2, 3}, {-1, 2, 3}});
  Solver su;
  CHECK(su.branch_on(unsat, Literal::positive(1)).decision == Decision::Unsatisfiable);
}

TEST_CASE("split_on_cut examples") {
  // F2 needs y'1 false; F1 allows both.
  Formula f = Formula::from_dimacs({{1, 2, 3}, {1, 4, 5}, {-1, 6, 7}, {2, 4, 8}, {6, 9, 10}, {6, 9, 11}, {-9, 10, 11}});
  std::vector<ClauseId> side{0, 1, 2, 3};
  auto cut = verify_cut(f, side, Literal::positive(6));
  REQUIRE(cut);
  Solver s;
  SolveResult r = s.split_on_cut(f, *cut);
  check_against_oracle(f, r);

  Formula dead = Formula::from_dimacs({{1, 2, 3}, {-1, 2, 3}, {3, 4, 5}, {4, 6, 7}});
  std::vector<ClauseId> dead_side{0, 1, 2};
  auto dead_cut = verify_cut(dead, dead_side, Literal::positive(4), false);
  REQUIRE(dead_cut);
  Solver sd;
  CHECK(sd.split_on_cut(dead, *dead_cut).decision == Decision::Unsatisfiable);

  Formula tail = Formula::from_dimacs({{1, 2, 3}, {3, 4, 5}});
  std::vector<ClauseId> tail_side{0};
  auto tail_cut = verify_cut(tail, tail_side, Literal::positive(3));
  REQUIRE(tail_cut);
  Solver st;
  check_against_oracle(tail, st.split_on_cut(tail, *tail_cut));
}

TEST_CASE("solve agrees with the oracle") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 2000; ++i) {
    Formula f = testing::random_formula(rng, 3 + static_cast<int>(rng() % 10), 1 + static_cast<int>(rng() % 14), i % 5 == 0);
    check_against_oracle(f, solve(f));
  }
  for (const Formula& f : oracle_corpus()) check_against_oracle(f, solve(f));
  for (const Formula& f : branching_corpus()) check_model(f, solve(f));
  check_against_oracle(kCase5, solve(kCase5));
  check_against_oracle(kCase611, solve(kCase611));
  check_against_oracle(kCase7, solve(kCase7));
  check_against_oracle(kCase8, solve(kCase8));
}

TEST_CASE("the corpus reaches the branching cases") {
  std::map<std::string, std::uint64_t> hits;
  for (const Formula& f : branching_corpus())
    for (const auto& [tag, n] : solve(f).stats.case_hits) hits[tag] += n;
  for (std::string tag : {"3", "5", "6.2", "7", "8"}) {
    INFO(tag);
    CHECK(hits[tag] > 0);
  }
}

TEST_CASE("branching vectors at Case 5 and Case 6.2 nodes") {
  std::uint64_t case5 = 0, case62 = 0;
  for (const Formula& f : branching_corpus()) {
    for (const BranchRecord& rec : solve(f).stats.records) {
      INFO(rec.tag << " (" << rec.r1 << "," << rec.r2 << ")");
      CHECK(rec.r1 > 0);
      CHECK(rec.r2 > 0);
      if (rec.tag == "5") {
        ++case5;
        CHECK(rec.r1 + rec.r2 >= 10);
        CHECK(std::min(rec.r1, rec.r2) >= 4);
      } else if (rec.tag == "6.2") {
        ++case62;
        CHECK(std::min(rec.r1, rec.r2) >= 4);
      }
    }
  }
  CHECK(case5 > 0);
  CHECK(case62 > 0);
}

TEST_CASE("node counts stay under the claimed bound") {
  for (const Formula& f : oracle_corpus()) CHECK(bound_report(solve(f).stats, f.num_clauses()).pass);
  for (const Formula& f : branching_corpus()) {
    SolveResult r = solve(f);
    BoundReport rep = bound_report(r.stats, f.num_clauses());
    CHECK(rep.pass);
  }
}

TEST_CASE("decomposition never costs extra nodes") {
  SolverConfig whole;
  whole.decompose = false;
  for (const Formula& f : branching_corpus()) {
    SolveResult split = solve(f);
    SolveResult joined = solve(f, whole);
    CHECK(split.decision == joined.decision);
    CHECK(split.stats.nodes <= joined.stats.nodes);
  }
}

TEST_CASE("node limit aborts instead of answering") {
  std::optional<Formula> busy;
  for (const Formula& f : branching_corpus())
    if (solve(f).stats.nodes >= 2) {
      busy = f;
      break;
    }
  REQUIRE(busy);
  SolverConfig limited;
  limited.node_limit = 1;
  SolveResult r = solve(*busy, limited);
  CHECK(r.decision == Decision::Aborted);
  CHECK_FALSE(r.model);
}

TEST_CASE("the Case 7 shortcut keeps decisions exact") {
  SolverConfig shortcut;
  shortcut.case7_shortcut = true;
  std::uint64_t used = 0;
  for (const Formula& f : oracle_corpus()) check_against_oracle(f, solve(f, shortcut));
  for (const Formula& f : branching_corpus()) {
    SolveResult r = solve(f, shortcut);
    check_model(f, r);
    CHECK(r.decision == solve(f).decision);
    used += r.stats.case_hits.count("7-forced") ? r.stats.case_hits.at("7-forced") : 0;
  }
  MESSAGE("Case 7 shortcut taken " << used << " times on the random corpus");

  SolveResult plain = solve(kCase7);
  SolveResult fast = solve(kCase7, shortcut);
  check_against_oracle(kCase7, plain);
  check_against_oracle(kCase7, fast);
  CHECK(fast.stats.case_hits["7-forced"] == 1);
  CHECK(fast.stats.nodes < plain.stats.nodes);
}

TEST_CASE("solving is deterministic") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Formula f = gen_random({20, 24, seed, 0.5, std::nullopt, false});
    SolveResult a = solve(f), b = solve(f);
    CHECK(a.model == b.model);
    CHECK(a.stats.case_hits == b.stats.case_hits);
    CHECK(a.stats.nodes == b.stats.nodes);
  }
}
