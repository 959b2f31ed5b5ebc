#pragma once

#include "x3sat/literal.hpp"
#include "x3sat/reconstruction.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace x3sat {

struct Clause {
  ClauseId id = 0;
  std::vector<Literal> literals;

  std::size_t width() const { return literals.size(); }
  int count(Literal l) const;
  bool contains(Literal l) const { return count(l) > 0; }
  bool mentions(Var v) const;
  // True when no two literals share a variable.
  bool has_distinct_vars() const;
};

struct Occurrence {
  ClauseId clause;
  int position;
  bool negated;
};

struct PolarityCounts {
  int positive = 0;
  int negative = 0;
  int degree() const { return positive + negative; }
  friend bool operator==(const PolarityCounts&, const PolarityCounts&) = default;
};

// A conjunction of clauses under exact-one semantics, with an occurrence
// index kept in lockstep with the clause contents.
//
// Clauses are ordered by id. Width is unrestricted here; the three-literal
// bound is enforced by the parser, and only the matching endgame builds
// wider clauses.
class Formula {
public:
  Formula() = default;
  explicit Formula(int declared_vars) : declared_vars_(declared_vars) {}

  // Test and tooling convenience: clauses given as DIMACS integers.
  static Formula from_dimacs(std::initializer_list<std::initializer_list<int>> clauses);
  static Formula from_dimacs(const std::vector<std::vector<int>>& clauses);

  ClauseId add_clause(std::vector<Literal> literals);
  // Inserts with a caller-chosen id (used when carving sub-formulas).
  void insert_clause(Clause clause);
  void remove_clause(ClauseId id);
  void replace_clause(ClauseId id, std::vector<Literal> literals);

  bool has_clause(ClauseId id) const { return clauses_.contains(id); }
  const Clause& clause(ClauseId id) const;
  const std::map<ClauseId, Clause>& clauses() const { return clauses_; }

  std::size_t num_clauses() const { return clauses_.size(); }
  std::size_t num_vars() const { return occurrences_.size(); }
  std::size_t num_literals() const;
  bool empty() const { return clauses_.empty(); }
  bool has_empty_clause() const;

  const std::vector<Occurrence>& occurrences(Var v) const;
  std::vector<Var> variables() const;
  bool mentions(Var v) const { return occurrences_.contains(v); }

  PolarityCounts polarity_counts(Var v) const;
  int degree(Var v) const { return static_cast<int>(occurrences(v).size()); }
  int max_degree() const;
  int count(Literal l) const;
  bool is_singleton(Var v) const { return degree(v) == 1; }
  // Distinct clause ids containing the literal, in id order.
  std::vector<ClauseId> clauses_with(Literal l) const;
  std::vector<ClauseId> clauses_with(Var v) const;

  int declared_vars() const { return declared_vars_; }
  void set_declared_vars(int n) { declared_vars_ = n; }
  ClauseId next_id() const { return next_id_; }

  // Differences between the maintained index and a from-scratch rebuild;
  // empty when coherent.
  std::vector<std::string> check_index() const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  void index_clause(const Clause& c);
  void unindex_clause(const Clause& c);

  std::map<ClauseId, Clause> clauses_;
  std::map<Var, std::vector<Occurrence>> occurrences_;
  ClauseId next_id_ = 0;
  int declared_vars_ = 0;
};

// --- structural queries ---------------------------------------------------

PolarityCounts polarity_counts(const Formula& f, Var v);

// Number of clauses sharing a variable with N(x), the variables that occur in
// a clause together with literal x.
std::size_t num_connected_clauses(const Formula& f, Literal x);

// Variables of the given clauses, sorted.
std::vector<Var> variables_of(const Formula& f, std::span<const ClauseId> ids);

// Sub-formula made of the listed clauses, ids preserved.
Formula subformula(const Formula& f, std::span<const ClauseId> ids);

// Union of variable-disjoint formulas (clause ids re-issued).
Formula conjoin(const Formula& a, const Formula& b);

// --- evaluation -----------------------------------------------------------

class PartialAssignmentError : public std::invalid_argument {
public:
  PartialAssignmentError(std::vector<Var> missing);
  const std::vector<Var>& missing() const { return missing_; }

private:
  std::vector<Var> missing_;
};

// True iff every clause has exactly one true literal. Throws
// PartialAssignmentError when a variable of `f` is unassigned.
bool evaluate_exact(const Formula& f, const Assignment& a);

// --- substitution ---------------------------------------------------------

enum class SubstOutcome { Applied, Conflict, Absent };

// F(targets <- false): every target literal becomes false (its complement
// true) and the exact-one consequences are propagated. Bindings go to `log`.
SubstOutcome substitute_false(Formula& f, std::span<const Literal> targets, ReconstructionLog& log);
SubstOutcome substitute_false(Formula& f, Literal target, ReconstructionLog& log);

// Commits `l` to true and propagates; the dual of substitute_false.
SubstOutcome assign_true(Formula& f, Literal l, ReconstructionLog& log);

// F(target <- replacement): occurrences of `target` become `replacement` and
// occurrences of ~target become ~replacement. Logs an Alias record.
SubstOutcome substitute_literal(Formula& f, Literal target, Literal replacement, ReconstructionLog& log);

// F(C <- literals), keeping the clause id.
SubstOutcome substitute_clause(Formula& f, ClauseId id, std::vector<Literal> literals);

// F / pi. Throws std::invalid_argument if some clause is absent.
void remove(Formula& f, std::span<const ClauseId> ids);

// Flips the polarity of every occurrence of `v` and logs it.
void flip_variable(Formula& f, Var v, ReconstructionLog& log);

} // namespace x3sat
