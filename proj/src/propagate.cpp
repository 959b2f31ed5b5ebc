#include "x3sat/propagate.hpp"

namespace x3sat {

OmegaResult omega(const Formula& f, Literal x, ReconstructionLog& log, const ReduceOptions& options) {
  if (!f.mentions(x.var())) throw std::invalid_argument("omega: variable " + std::to_string(x.var()) + " not in formula");
  OmegaResult out{f, false, {}};
  if (assign_true(out.formula, x, log) == SubstOutcome::Conflict) {
    out.conflict = true;
    return out;
  }
  Reduced r = reduce(std::move(out.formula), log, options);
  out.formula = std::move(r.formula);
  out.conflict = r.conflict;
  out.trace = std::move(r.trace);
  return out;
}

} // namespace x3sat
