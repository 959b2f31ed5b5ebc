#include "x3sat/analysis.hpp"
#include "x3sat/branch.hpp"
#include "x3sat/connection.hpp"
#include "x3sat/dimacs.hpp"
#include "x3sat/generate.hpp"
#include "x3sat/oracle.hpp"
#include "x3sat/rulecheck.hpp"
#include "x3sat/simplify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace x3sat;

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;

// Set by --cnf on the commands that read an instance.
bool g_accept_cnf = false;

Formula load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dimacs(in, g_accept_cnf ? HeaderFormat::AcceptCnf : HeaderFormat::X3sat);
}

std::string stats_line(const BranchStats& s) {
  std::ostringstream os;
  os << "c stats nodes=" << s.nodes << " depth=" << s.max_depth << " exhaustive=" << s.exhaustive_instances
     << " endgame=" << s.endgame_instances << " cases=";
  bool first = true;
  for (const auto& [tag, n] : s.case_hits) {
    os << (first ? "" : ",") << tag << ':' << n;
    first = false;
  }
  return os.str();
}

int cmd_solve(const std::string& path, bool with_stats, std::uint64_t node_limit, bool shortcut) {
  Formula f = load(path);
  SolverConfig cfg;
  cfg.node_limit = node_limit;
  cfg.case7_shortcut = shortcut;
  SolveResult r = solve(f, cfg);
  if (r.decision == Decision::Aborted) {
    std::cout << "s UNKNOWN\n";
    if (with_stats) std::cout << stats_line(r.stats) << '\n';
    std::cerr << "error: node limit reached\n";
    return 1;
  }
  bool sat = r.decision == Decision::Satisfiable;
  std::cout << (sat ? "s EXACT-SATISFIABLE" : "s UNSATISFIABLE") << '\n';
  if (sat) std::cout << format_model(*r.model, std::max(f.declared_vars(), f.variables().empty() ? 0 : f.variables().back())) << '\n';
  if (with_stats) std::cout << stats_line(r.stats) << '\n';
  return sat ? kExitSat : kExitUnsat;
}

int cmd_verify(const std::string& path) {
  Formula f = load(path);
  SolveResult r = solve(f);
  OracleResult o = brute_force(f);
  bool solver_sat = r.decision == Decision::Satisfiable;
  bool model_ok = !solver_sat || evaluate_exact(f, *r.model);
  std::cout << "solver " << to_string(r.decision) << ", oracle " << (o.satisfiable ? "satisfiable" : "unsatisfiable")
            << ", model " << (solver_sat ? (model_ok ? "valid" : "INVALID") : "n/a") << '\n';
  bool agree = r.decision != Decision::Aborted && solver_sat == o.satisfiable && model_ok;
  std::cout << (agree ? "agree" : "DISAGREE") << '\n';
  return agree ? 0 : 1;
}

int cmd_gen(const GenOptions& o, const std::string& out) {
  std::string text = serialize_dimacs(gen_random(o));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot write " + out);
    file << text;
  }
  return 0;
}

int cmd_rulecheck(const std::string& rule) {
  std::vector<RuleId> rules;
  if (rule.empty()) {
    rules.assign(kAllRules.begin(), kAllRules.end());
  } else {
    auto id = parse_rule_id(rule);
    if (!id) throw std::invalid_argument("unknown rule '" + rule + "'");
    rules.push_back(*id);
  }
  for (RuleId r : rules) std::cout << to_json_line(rule_soundness_check(r)) << '\n';
  return 0;
}

int cmd_lambda(const std::vector<int>& r) {
  std::cout << std::fixed << std::setprecision(6) << branching_number(r) << '\n';
  return 0;
}

int cmd_stats(const std::string& path) {
  Formula f = load(path);
  ReconstructionLog log;
  Reduced red = reduce(f, log);
  nlohmann::json j;
  j["clauses"] = f.num_clauses();
  j["variables"] = f.num_vars();
  j["max_degree"] = f.max_degree();
  j["components"] = components(f).size();
  j["reduced_clauses"] = red.formula.num_clauses();
  j["reduced_variables"] = red.formula.num_vars();
  j["reduce_conflict"] = red.conflict;
  j["reduce_steps"] = red.trace.size();
  j["reduced_components"] = components(red.formula).size();
  j["cut_edges"] = count_cut_edges(build_graph(red.formula));
  j["structure_violations"] = red.conflict ? 0 : assert_simplified(red.formula).size();
  std::cout << j.dump() << '\n';
  return 0;
}

struct BenchRow {
  int n = 0, m = 0, count = 0;
  std::uint64_t seed = 0;
  double neg_prob = 0.25;
  std::optional<int> cap;
  bool planted = false;
};

int cmd_bench(const std::string& spec_path, const std::string& json_out) {
  std::ifstream in(spec_path);
  if (!in) throw std::runtime_error("cannot open " + spec_path);
  nlohmann::json spec = nlohmann::json::parse(in);
  std::vector<BenchRow> rows;
  for (const auto& r : spec.at("rows")) {
    BenchRow row;
    row.n = r.at("n");
    row.m = r.at("m");
    row.count = r.at("count");
    row.seed = r.value("seed", std::uint64_t{0});
    row.neg_prob = r.value("neg_prob", 0.25);
    if (r.contains("cap")) row.cap = r.at("cap").get<int>();
    row.planted = r.value("planted", false);
    rows.push_back(row);
  }

  nlohmann::json results = nlohmann::json::array();
  std::cout << std::left << std::setw(6) << "n" << std::setw(6) << "m" << std::setw(8) << "count" << std::setw(8)
            << "sat%" << std::setw(11) << "mean-nodes" << std::setw(10) << "max-nodes" << std::setw(14)
            << "max-log/m" << std::setw(9) << "checked" << "bound\n";
  bool all_pass = true;
  for (const BenchRow& row : rows) {
    int sat = 0, checked = 0;
    std::uint64_t total_nodes = 0, max_nodes = 0;
    double worst = 0.0;
    bool pass = true;
    for (int i = 0; i < row.count; ++i) {
      GenOptions g{row.n, row.m, row.seed + static_cast<std::uint64_t>(i), row.neg_prob, row.cap, row.planted};
      Formula f = gen_random(g);
      SolveResult r = solve(f);
      bool solver_sat = r.decision == Decision::Satisfiable;
      // Above the oracle limit only the model itself can be checked.
      bool checkable = f.num_vars() <= static_cast<std::size_t>(OracleOptions{}.var_limit);
      bool oracle_sat = checkable ? brute_force(f).satisfiable : solver_sat;
      checked += checkable ? 1 : 0;
      if (r.decision == Decision::Aborted || solver_sat != oracle_sat || (solver_sat && !evaluate_exact(f, *r.model))) {
        std::string repro = "bench-disagreement-n" + std::to_string(row.n) + "-m" + std::to_string(row.m) + "-seed" +
                            std::to_string(g.seed) + ".cnf";
        std::ofstream(repro) << serialize_dimacs(f);
        std::cerr << "error: solver and oracle disagree; instance written to " << repro << '\n';
        return 1;
      }
      sat += solver_sat ? 1 : 0;
      total_nodes += r.stats.nodes;
      max_nodes = std::max(max_nodes, r.stats.nodes);
      BoundReport b = bound_report(r.stats, f.num_clauses());
      worst = std::max(worst, b.log_ratio);
      pass = pass && b.pass;
    }
    all_pass = all_pass && pass;
    double mean = row.count ? static_cast<double>(total_nodes) / row.count : 0.0;
    double sat_pct = row.count ? 100.0 * sat / row.count : 0.0;
    std::cout << std::left << std::setw(6) << row.n << std::setw(6) << row.m << std::setw(8) << row.count << std::fixed
              << std::setprecision(1) << std::setw(8) << sat_pct << std::setprecision(2) << std::setw(11) << mean
              << std::setw(10) << max_nodes << std::setprecision(4) << std::setw(14) << worst << std::setw(9) << checked
              << (pass ? "pass" : "FAIL")
              << '\n';
    results.push_back({{"n", row.n}, {"m", row.m}, {"count", row.count}, {"sat", sat}, {"mean_nodes", mean},
                       {"max_nodes", max_nodes}, {"max_log_ratio", worst}, {"oracle_checked", checked}, {"bound_pass", pass}});
  }
  if (!json_out.empty()) {
    std::ofstream(json_out) << results.dump(2) << '\n';
  } else {
    std::cout << results.dump() << '\n';
  }
  return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-one 3-SAT solver"};
  app.require_subcommand(1);

  std::string file;
  bool with_stats = false, shortcut = false;
  std::uint64_t node_limit = 0;
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance and print a model");
  solve_cmd->add_option("file", file, "instance in DIMACS-style format")->required();
  solve_cmd->add_flag("--stats", with_stats, "print search statistics");
  solve_cmd->add_option("--node-limit", node_limit, "abort after this many branch nodes (0: none)");
  solve_cmd->add_flag("--cnf", g_accept_cnf, "accept a 'p cnf' header");
  solve_cmd->add_flag("--case7-shortcut", shortcut, "force x=false in the (3,0) case when a clause lies inside Y1");

  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver with exhaustive search");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_flag("--cnf", g_accept_cnf, "accept a 'p cnf' header");

  GenOptions gen;
  int cap = 0;
  std::string out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen.n, "variables")->required();
  gen_cmd->add_option("--m", gen.m, "clauses")->required();
  gen_cmd->add_option("--seed", gen.seed, "random seed")->required();
  gen_cmd->add_option("--neg-prob", gen.neg_prob, "probability a literal is negated");
  auto* cap_opt = gen_cmd->add_option("--cap", cap, "maximum variable degree");
  gen_cmd->add_option("--out", out, "output file (default stdout)");
  gen_cmd->add_flag("--planted", gen.planted, "plant a hidden exact-one model");

  std::string rule;
  auto* rule_cmd = app.add_subcommand("rulecheck", "Audit rewrite rules against exhaustive search");
  rule_cmd->add_option("--rule", rule, "single rule, e.g. TR9 or THM3");

  std::vector<int> vec;
  auto* lambda_cmd = app.add_subcommand("lambda", "Branching number of a branching vector");
  lambda_cmd->add_option("r", vec, "clause reductions")->required();

  std::string spec_path, json_out;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark corpus");
  bench_cmd->add_option("spec", spec_path, "JSON corpus description")->required();
  bench_cmd->add_option("--json", json_out, "write per-row results here");

  auto* stats_cmd = app.add_subcommand("stats", "Structural statistics of an instance");
  stats_cmd->add_option("file", file)->required();
  stats_cmd->add_flag("--cnf", g_accept_cnf, "accept a 'p cnf' header");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) return cmd_solve(file, with_stats, node_limit, shortcut);
    if (*verify_cmd) return cmd_verify(file);
    if (*gen_cmd) {
      if (*cap_opt) gen.cap = cap;
      return cmd_gen(gen, out);
    }
    if (*rule_cmd) return cmd_rulecheck(rule);
    if (*lambda_cmd) return cmd_lambda(vec);
    if (*bench_cmd) return cmd_bench(spec_path, json_out);
    if (*stats_cmd) return cmd_stats(file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
