#pragma once

#include "x3sat/formula.hpp"

#include <cstdint>
#include <optional>

namespace x3sat {

struct GenOptions {
  int n = 10;
  int m = 10;
  std::uint64_t seed = 0;
  double neg_prob = 0.25;
  std::optional<int> cap;  // maximum variable degree
  // Draw a hidden assignment and give every clause exactly one literal it
  // satisfies; neg_prob is then unused and the instance is satisfiable.
  bool planted = false;
};

// Random formula of m 3-clauses over distinct variables from 1..n. With a
// cap, variables that reached it are no longer drawn, and a draw that runs
// out of variables is repeated. Throws std::invalid_argument for n < 3,
// m < 1, or cap * n < 3m.
Formula gen_random(const GenOptions& options);

} // namespace x3sat
