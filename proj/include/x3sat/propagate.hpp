#pragma once

#include "x3sat/formula.hpp"
#include "x3sat/simplify.hpp"

namespace x3sat {

struct OmegaResult {
  Formula formula;
  bool conflict = false;
  RewriteTrace trace;  // reduce steps run after the cascade
};

// Commits `x` to true, propagates exact-one consequences, then reduces.
// Throws std::invalid_argument when var(x) does not occur in `f`.
OmegaResult omega(const Formula& f, Literal x, ReconstructionLog& log, const ReduceOptions& options = {});

} // namespace x3sat
