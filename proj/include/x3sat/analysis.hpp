#pragma once

#include "x3sat/stats.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace x3sat {

// Positive root of 1 - sum_i x^(-r_i). Throws std::invalid_argument for an
// empty vector or a non-positive entry.
double branching_number(std::span<const int> r);
double branching_number(std::initializer_list<int> r);

inline constexpr double kClaimedBase = 1.15855;
inline constexpr double kBoundSlack = 0.02;

struct BoundReport {
  std::uint64_t nodes = 0;
  std::size_t clauses = 0;
  double worst_lambda = 1.0;  // over recorded branching vectors
  double log_ratio = 0.0;     // log(nodes + 1) / m
  bool pass = true;
};

// Compares the node count with kClaimedBase^m in log space, allowing
// kBoundSlack for small-m constants.
BoundReport bound_report(const BranchStats& stats, std::size_t m);

} // namespace x3sat
