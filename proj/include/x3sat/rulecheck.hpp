#pragma once

#include "x3sat/simplify.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace x3sat {

struct RuleCheckOptions {
  // Random context draws per sign pattern, on top of the bare pattern.
  int contexts_per_pattern = 3;
  std::uint64_t seed = 1;
};

struct RuleReport {
  RuleId rule;
  std::size_t instances = 0;  // formulas generated
  std::size_t applied = 0;    // of those, formulas the rule fired on
  std::size_t failures = 0;
  std::optional<std::string> counterexample;
};

// Builds small formulas around the rule's clause skeleton (every sign
// pattern, plus up to two random context clauses), applies the rule where it
// matches, and checks that the decision is unchanged and that every model of
// the rewritten formula replays to a model of the original.
RuleReport rule_soundness_check(RuleId r, const RuleCheckOptions& options = {});

// One JSON object on a single line.
std::string to_json_line(const RuleReport& report);

} // namespace x3sat
