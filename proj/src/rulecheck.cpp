#include "x3sat/rulecheck.hpp"

#include "x3sat/dimacs.hpp"
#include "x3sat/oracle.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

namespace x3sat {

namespace {

using Skeleton = std::vector<std::vector<int>>;

// Variable structure of each rule's pattern; signs are enumerated.
std::vector<Skeleton> skeletons(RuleId r) {
  switch (r) {
    case RuleId::TR1: return {{{1, 2, 3}, {1, 4, 5}}, {{1, 2, 3}, {1, 4, 5}, {1, 2, 6}}};
    case RuleId::TR2: return {{{1}, {1, 2, 3}}, {{1}, {2, 3, 4}}};
    case RuleId::TR3: return {{{1, 2}, {1, 3, 4}, {2, 3, 5}}, {{1, 1}, {1, 2, 3}}};
    case RuleId::TR4: return {{{1, 1, 2}, {1, 3, 4}}, {{1, 1, 2}, {2, 3, 4}}};
    case RuleId::TR5: return {{{1, 1, 2}, {2, 3, 4}}, {{1, 1, 2}, {1, 3, 4}}};
    case RuleId::TR6: return {{{1, 2, 3}, {3, 4, 5}}, {{1, 2, 3}}};
    case RuleId::TR7:
    case RuleId::TR8:
    case RuleId::TR13: return {{{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}, {{1, 2, 3}, {1, 2, 4}}};
    case RuleId::TR9:
    case RuleId::TR11:
    case RuleId::TR12: return {{{1, 4, 5}, {2, 5, 6}, {3, 6, 4}}};
    case RuleId::TR10: return {{{1, 3, 4}, {2, 4, 3}}, {{1, 4, 5}, {2, 5, 6}, {3, 6, 4}}};
    case RuleId::TR14: return {{{1, 2, 3}, {1, 4, 5}, {2, 4, 6}}};
    case RuleId::THM2: return {{{1, 2, 3}, {1, 4, 5}, {2, 4, 6}}};
    case RuleId::THM3:
    case RuleId::THM4: return {{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {6, 4, 8}}, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 8}}};
  }
  return {};
}

int max_var(const Skeleton& s) {
  int v = 0;
  for (const auto& c : s)
    for (int x : c) v = std::max(v, x);
  return v;
}

std::optional<std::string> check_instance(const Formula& f, RuleId r, bool& applied) {
  ReconstructionLog log;
  auto app = apply_rule(f, r, log);
  applied = app.has_value();
  if (!app) return std::nullopt;

  OracleResult before = brute_force(f);
  OracleOptions all;
  all.collect_models = true;
  OracleResult after = app->conflict ? OracleResult{} : brute_force(app->formula, all);

  std::ostringstream why;
  if (before.satisfiable != after.satisfiable) {
    why << "decision changed: " << (before.satisfiable ? "sat" : "unsat") << " -> "
        << (after.satisfiable ? "sat" : "unsat");
  } else {
    for (const Assignment& m : after.models) {
      Assignment full = log.replay(m);
      bool ok = false;
      try {
        ok = evaluate_exact(f, full);
      } catch (const PartialAssignmentError&) {
        why << "replayed model leaves variables unassigned";
        break;
      }
      if (!ok) {
        why << "replayed model violates the original formula";
        break;
      }
    }
  }
  if (why.str().empty()) return std::nullopt;
  return why.str() + "; " + describe(app->entry) + "\n" + serialize_dimacs(f);
}

} // namespace

RuleReport rule_soundness_check(RuleId r, const RuleCheckOptions& options) {
  RuleReport report;
  report.rule = r;
  std::mt19937_64 rng(options.seed ^ (static_cast<std::uint64_t>(r) + 1) * 0x9e3779b97f4a7c15ULL);

  auto run = [&](const std::vector<std::vector<int>>& clauses) {
    Formula f = Formula::from_dimacs(clauses);
    ++report.instances;
    bool applied = false;
    auto failure = check_instance(f, r, applied);
    if (applied) ++report.applied;
    if (failure) {
      ++report.failures;
      if (!report.counterexample) report.counterexample = failure;
    }
  };

  for (const Skeleton& sk : skeletons(r)) {
    std::size_t width = 0;
    for (const auto& c : sk) width += c.size();
    int pool = max_var(sk) + 1;  // one fresh variable for context clauses
    std::uniform_int_distribution<int> pick_var(1, pool);
    std::bernoulli_distribution coin(0.5);
    auto random_clause = [&] {
      std::vector<int> c;
      while (c.size() < 3) {
        int v = pick_var(rng);
        if (std::find(c.begin(), c.end(), v) != c.end() || std::find(c.begin(), c.end(), -v) != c.end()) continue;
        c.push_back(coin(rng) ? -v : v);
      }
      return c;
    };
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << width); ++signs) {
      std::vector<std::vector<int>> base;
      std::size_t bit = 0;
      for (const auto& c : sk) {
        std::vector<int> clause;
        for (int v : c) clause.push_back(((signs >> bit++) & 1U) ? -v : v);
        base.push_back(std::move(clause));
      }
      run(base);
      for (int k = 0; k < options.contexts_per_pattern; ++k) {
        auto with = base;
        int extra = 1 + (k % 2);
        for (int e = 0; e < extra; ++e) with.push_back(random_clause());
        run(with);
      }
    }
  }
  return report;
}

std::string to_json_line(const RuleReport& report) {
  nlohmann::json j;
  j["rule"] = std::string(to_string(report.rule));
  j["instances"] = report.instances;
  j["applied"] = report.applied;
  j["failures"] = report.failures;
  j["counterexample"] = report.counterexample ? nlohmann::json(*report.counterexample) : nlohmann::json(nullptr);
  return j.dump();
}

} // namespace x3sat
