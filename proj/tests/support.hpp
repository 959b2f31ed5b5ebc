#pragma once

#include "x3sat/formula.hpp"
#include "x3sat/oracle.hpp"

#include <random>
#include <vector>

namespace x3sat::testing {

// Random formula with clause widths 1..3; repeated and complementary literals
// inside a clause are allowed when `messy` is set.
inline Formula random_formula(std::mt19937_64& rng, int n, int m, bool messy = false) {
  std::uniform_int_distribution<int> var(1, n);
  std::uniform_int_distribution<int> width(1, 3);
  std::bernoulli_distribution neg(0.35);
  std::bernoulli_distribution three(0.7);
  Formula f(n);
  for (int k = 0; k < m; ++k) {
    int w = three(rng) ? 3 : width(rng);
    std::vector<Literal> lits;
    while (static_cast<int>(lits.size()) < w) {
      Literal l(var(rng), neg(rng));
      bool clash = false;
      for (Literal u : lits) clash = clash || u.var() == l.var();
      if (clash && !messy) continue;
      lits.push_back(l);
    }
    f.add_clause(std::move(lits));
  }
  return f;
}

// Fills variables of `f` missing from `a` with false.
inline Assignment completed(const Formula& f, Assignment a) {
  for (Var v : f.variables()) a.try_emplace(v, false);
  return a;
}

inline bool oracle_sat(const Formula& f) { return brute_force(f).satisfiable; }

} // namespace x3sat::testing
