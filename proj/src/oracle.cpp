#include "x3sat/oracle.hpp"

#include <bit>
#include <map>

namespace x3sat {

namespace {

struct CompiledClause {
  std::uint32_t positive = 0;
  std::uint32_t negative = 0;
  // Clauses with a repeated variable are checked literal by literal.
  std::vector<std::pair<int, bool>> literals;
  bool simple = true;
};

bool exactly_one(const CompiledClause& c, std::uint32_t mask) {
  if (c.simple) return std::popcount((mask & c.positive) | (~mask & c.negative)) == 1;
  int hits = 0;
  for (auto [bit, negated] : c.literals) hits += (((mask >> bit) & 1U) != 0) != negated ? 1 : 0;
  return hits == 1;
}

} // namespace

OracleResult brute_force(const Formula& f, const OracleOptions& options) {
  std::vector<Var> vars = f.variables();
  int n = static_cast<int>(vars.size());
  if (n > options.var_limit || n > 31)
    throw OracleLimitError("brute force refused: " + std::to_string(n) + " variables exceed limit " +
                           std::to_string(options.var_limit));
  std::map<Var, int> bit;
  for (int i = 0; i < n; ++i) bit.emplace(vars[static_cast<std::size_t>(i)], i);

  std::vector<CompiledClause> clauses;
  for (const auto& [id, c] : f.clauses()) {
    CompiledClause cc;
    cc.simple = c.has_distinct_vars();
    for (Literal l : c.literals) {
      int b = bit.at(l.var());
      (l.negated() ? cc.negative : cc.positive) |= 1U << b;
      cc.literals.emplace_back(b, l.negated());
    }
    clauses.push_back(std::move(cc));
  }
  bool has_empty = f.has_empty_clause();

  auto decode = [&](std::uint32_t mask) {
    Assignment a;
    for (int i = 0; i < n; ++i) a.emplace(vars[static_cast<std::size_t>(i)], ((mask >> i) & 1U) != 0);
    return a;
  };

  OracleResult out;
  bool exhaustive = options.count_models || options.collect_models;
  const std::uint64_t total = std::uint64_t{1} << n;
  if (!has_empty) {
    for (std::uint64_t m = 0; m < total; ++m) {
      auto mask = static_cast<std::uint32_t>(m);
      bool ok = true;
      for (const auto& c : clauses) {
        if (!exactly_one(c, mask)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (!out.satisfiable) {
        out.satisfiable = true;
        out.model = decode(mask);
      }
      ++out.model_count;
      if (options.collect_models) out.models.push_back(decode(mask));
      if (!exhaustive) break;
    }
  }
  return out;
}

} // namespace x3sat
