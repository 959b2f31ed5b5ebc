#include "x3sat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace x3sat {

namespace {

double h(std::span<const int> r, double x) {
  double s = 1.0;
  for (int ri : r) s -= std::pow(x, -ri);
  return s;
}

double dh(std::span<const int> r, double x) {
  double s = 0.0;
  for (int ri : r) s += ri * std::pow(x, -ri - 1);
  return s;
}

} // namespace

double branching_number(std::span<const int> r) {
  if (r.empty()) throw std::invalid_argument("branching vector is empty");
  if (std::any_of(r.begin(), r.end(), [](int ri) { return ri <= 0; }))
    throw std::invalid_argument("branching vector entries must be positive");
  if (r.size() == 1) return 1.0;

  // h is increasing on (1, inf); at k^(1/min r) every term is at most 1/k.
  int rmin = *std::min_element(r.begin(), r.end());
  double lo = 1.0 + 1e-12;
  double hi = std::pow(static_cast<double>(r.size()), 1.0 / rmin);
  while (hi - lo > 1e-7) {
    double mid = 0.5 * (lo + hi);
    (h(r, mid) < 0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 20; ++i) {
    double step = h(r, x) / dh(r, x);
    x -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return x;
}

double branching_number(std::initializer_list<int> r) {
  return branching_number(std::span<const int>(r.begin(), r.size()));
}

BoundReport bound_report(const BranchStats& stats, std::size_t m) {
  BoundReport rep;
  rep.nodes = stats.nodes;
  rep.clauses = m;
  for (const BranchRecord& rec : stats.records) {
    if (rec.r1 <= 0 || rec.r2 <= 0) continue;
    int v[2] = {rec.r1, rec.r2};
    rep.worst_lambda = std::max(rep.worst_lambda, branching_number(v));
  }
  if (m == 0) {
    rep.log_ratio = 0.0;
    rep.pass = stats.nodes == 0;
    return rep;
  }
  rep.log_ratio = std::log(static_cast<double>(stats.nodes) + 1.0) / static_cast<double>(m);
  rep.pass = rep.log_ratio <= std::log(kClaimedBase) + kBoundSlack;
  return rep;
}

} // namespace x3sat
