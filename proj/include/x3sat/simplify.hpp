#pragma once

#include "x3sat/formula.hpp"

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace x3sat {

enum class RuleId {
  TR1, TR2, TR3, TR4, TR5, TR6, TR7, TR8, TR9, TR10, TR11, TR12, TR13, TR14,
  THM2, THM3, THM4,
};

inline constexpr std::array<RuleId, 17> kAllRules = {
    RuleId::TR1,  RuleId::TR2,  RuleId::TR3,  RuleId::TR4,  RuleId::TR5,  RuleId::TR6,
    RuleId::TR7,  RuleId::TR8,  RuleId::TR9,  RuleId::TR10, RuleId::TR11, RuleId::TR12,
    RuleId::TR13, RuleId::TR14, RuleId::THM2, RuleId::THM3, RuleId::THM4,
};

// Width reducers first, then polarity normalisation, then the rest in order.
inline constexpr std::array<RuleId, 17> kReduceOrder = {
    RuleId::TR2,  RuleId::TR3,  RuleId::TR1,  RuleId::TR4,  RuleId::TR5,  RuleId::TR6,
    RuleId::TR7,  RuleId::TR8,  RuleId::TR9,  RuleId::TR10, RuleId::TR11, RuleId::TR12,
    RuleId::TR13, RuleId::TR14, RuleId::THM2, RuleId::THM3, RuleId::THM4,
};

std::string_view to_string(RuleId r);
std::optional<RuleId> parse_rule_id(std::string_view name);

// True for rules that swap one clause for another of equal size. reduce()
// only fires these when they lower the sum of squared variable degrees.
bool is_equal_size_rewrite(RuleId r);

// --- edits ----------------------------------------------------------------
//
// Every rule application is expressed as a short list of primitive edits, so
// a trace can be replayed and each rule's effect inspected in isolation.

struct AssignEdit { std::vector<Literal> literals; };  // all made true, propagated
struct AliasEdit { Literal target; Literal replacement; };
struct FlipEdit { Var var; };
struct ReplaceEdit { ClauseId clause; std::vector<Literal> literals; };
struct RemoveEdit { ClauseId clause; };
struct DefineEdit { Exclusive record; };  // log only

using Edit = std::variant<AssignEdit, AliasEdit, FlipEdit, ReplaceEdit, RemoveEdit, DefineEdit>;

struct TraceEntry {
  RuleId rule;
  std::vector<ClauseId> clauses;  // clauses the pattern matched, in pattern order
  std::vector<Edit> edits;
};

using RewriteTrace = std::vector<TraceEntry>;

std::string describe(const TraceEntry& e);

// Applies edits in order. Returns false on conflict (formula left partial).
bool apply_edits(Formula& f, const std::vector<Edit>& edits, ReconstructionLog& log);

// --- single rules -----------------------------------------------------------

// First match of `r` in deterministic scan order (clause ids ascending,
// positions ascending, variables ascending). With `require_progress`, equal
// size rewrites only match where they lower the squared-degree sum.
std::optional<TraceEntry> match_rule(const Formula& f, RuleId r, bool require_progress = false);

struct RuleApplication {
  Formula formula;
  TraceEntry entry;
  bool conflict = false;
};

std::optional<RuleApplication> apply_rule(const Formula& f, RuleId r, ReconstructionLog& log);

// THM2..THM4 only; other ids throw std::invalid_argument.
std::optional<RuleApplication> apply_derived(const Formula& f, RuleId r, ReconstructionLog& log);

// --- fixpoint ---------------------------------------------------------------

class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct ReduceOptions {
  std::set<RuleId> disabled;
};

struct Reduced {
  Formula formula;
  RewriteTrace trace;
  bool conflict = false;
};

// Applies rules in kReduceOrder, one application then a rescan from the top,
// until none matches. Each application must strictly lower the measure
// (clauses, literal occurrences, variables, squared-degree sum, negative
// occurrences); a violation throws InternalError.
Reduced reduce(Formula f, ReconstructionLog& log, const ReduceOptions& options = {});

// Re-executes a trace's edits against `original`.
Reduced replay_trace(Formula original, const RewriteTrace& trace, ReconstructionLog& log);

// --- structure check --------------------------------------------------------

struct Violation {
  std::string kind;
  std::vector<ClauseId> clauses;
  std::optional<Literal> literal;
};

// Properties a fully simplified formula has: only 3-clauses, no two clauses
// sharing two variables, at most one singleton per clause, and each
// non-singleton (a,0)/(a,1) literal in some clause free of singletons.
std::vector<Violation> assert_simplified(const Formula& f);

} // namespace x3sat
