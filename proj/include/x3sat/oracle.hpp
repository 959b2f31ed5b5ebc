#pragma once

#include "x3sat/formula.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace x3sat {

class OracleLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int var_limit = 25;
  // Enumerate every assignment and count (or collect) the models instead of
  // stopping at the first one.
  bool count_models = false;
  bool collect_models = false;
};

struct OracleResult {
  bool satisfiable = false;
  std::optional<Assignment> model;  // first model in counting order
  std::uint64_t model_count = 0;    // only meaningful with count_models
  std::vector<Assignment> models;   // only filled with collect_models
};

// Exhaustive search over the variables occurring in `f` (binary counting,
// lowest variable as the least significant bit). Throws OracleLimitError
// above the variable limit.
OracleResult brute_force(const Formula& f, const OracleOptions& options = {});

} // namespace x3sat
