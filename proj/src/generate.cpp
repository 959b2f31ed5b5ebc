#include "x3sat/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace x3sat {

Formula gen_random(const GenOptions& o) {
  if (o.n < 3) throw std::invalid_argument("gen: n must be at least 3");
  if (o.m < 1) throw std::invalid_argument("gen: m must be at least 1");
  if (o.neg_prob < 0.0 || o.neg_prob > 1.0) throw std::invalid_argument("gen: neg-prob must lie in [0, 1]");
  if (o.cap && static_cast<long long>(*o.cap) * o.n < 3LL * o.m)
    throw std::invalid_argument("gen: cap " + std::to_string(*o.cap) + " too small for n=" + std::to_string(o.n) +
                                ", m=" + std::to_string(o.m));

  std::mt19937_64 rng(o.seed);
  std::bernoulli_distribution negate(o.neg_prob);
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> hidden(static_cast<std::size_t>(o.n) + 1, false);
  if (o.planted)
    for (Var v = 1; v <= o.n; ++v) hidden[static_cast<std::size_t>(v)] = coin(rng);
  // Under a cap a draw can strand the remaining capacity on fewer than three
  // variables; the whole instance is then redrawn from the same stream.
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<int> degree(static_cast<std::size_t>(o.n) + 1, 0);
    Formula f(o.n);
    bool stuck = false;
    for (int k = 0; k < o.m && !stuck; ++k) {
      std::vector<Var> open;
      for (Var v = 1; v <= o.n; ++v)
        if (!o.cap || degree[static_cast<std::size_t>(v)] < *o.cap) open.push_back(v);
      if (open.size() < 3) {
        stuck = true;
        break;
      }
      std::vector<Literal> clause;
      std::size_t witness = o.planted ? std::uniform_int_distribution<std::size_t>(0, 2)(rng) : 0;
      while (clause.size() < 3) {
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        std::size_t i = pick(rng);
        Var v = open[i];
        open.erase(open.begin() + static_cast<long>(i));
        ++degree[static_cast<std::size_t>(v)];
        if (o.planted) {
          bool value = hidden[static_cast<std::size_t>(v)];
          bool want_true = clause.size() == witness;
          clause.push_back(Literal(v, value != want_true));
        } else {
          clause.push_back(Literal(v, negate(rng)));
        }
      }
      f.add_clause(std::move(clause));
    }
    if (!stuck) return f;
  }
  throw std::invalid_argument("gen: no instance found under the degree cap");
}

} // namespace x3sat
