#pragma once

#include "x3sat/connection.hpp"
#include "x3sat/formula.hpp"
#include "x3sat/simplify.hpp"
#include "x3sat/stats.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace x3sat {

struct SolverConfig {
  std::uint64_t node_limit = 0;  // 0: unlimited
  // For a (3,0)-literal x with some clause lying inside var(Y1), explore only
  // x = false.
  bool case7_shortcut = false;
  // Split variable-disjoint parts and solve them separately.
  bool decompose = true;
  ReduceOptions reduce;
};

enum class Decision { Satisfiable, Unsatisfiable, Aborted };

std::string_view to_string(Decision d);

struct SolveResult {
  Decision decision = Decision::Unsatisfiable;
  std::optional<Assignment> model;  // assigns every variable of the input
  BranchStats stats;
};

struct CaseContext {
  std::optional<Literal> x;           // branching literal
  std::vector<ClauseId> clauses;      // C1, C2, C3 (x-clauses first)
  std::vector<Literal> y1;            // literals sharing a clause with x
  std::vector<Literal> y2;            // literals sharing a clause with ~x
  std::vector<ClauseId> connecting;   // other clauses touching var(Y1 u Y2)
  std::optional<Literal> cut_literal;
  std::vector<ClauseId> cut_side;     // F1 of a connected-clauses split
};

struct CaseSelection {
  std::string tag;  // "1" .. "8", with Case 6 sub-tags such as "6.1.3"
  CaseContext context;
};

// Dispatch of a reduced formula, first matching case wins. Throws
// InternalError if none applies (a formula that was not reduced).
CaseSelection select_case(const Formula& f, const SolverConfig& config = {});

class Solver {
public:
  explicit Solver(SolverConfig config = {}) : config_(std::move(config)) {}

  // Reduces, dispatches and returns a model of `f` on success. Variables 1..
  // declared_vars() missing from the search are set false.
  SolveResult solve(const Formula& f);

  // Two-way branch on x and ~x of a reduced formula, positive side first.
  SolveResult branch_on(const Formula& f, Literal x);

  // Splits on the cut literal: F1 by exhaustive search, F2 recursively, for
  // both polarities.
  SolveResult split_on_cut(const Formula& f, const CutSplit& cut);

  const BranchStats& stats() const { return stats_; }

private:
  std::optional<Assignment> search(const Formula& f, std::uint64_t depth);
  std::optional<Assignment> branch(const Formula& f, Literal x, const std::string& tag, std::uint64_t depth,
                                   bool skip_positive = false);
  std::optional<Assignment> split(const Formula& f, const CutSplit& cut, const std::string& tag, std::uint64_t depth);
  void count_node(const std::string& tag, int r1, int r2, std::uint64_t depth);
  SolveResult finish(const Formula& f, std::optional<Assignment> model, bool aborted);

  SolverConfig config_;
  BranchStats stats_;
};

SolveResult solve(const Formula& f, const SolverConfig& config = {});

} // namespace x3sat
