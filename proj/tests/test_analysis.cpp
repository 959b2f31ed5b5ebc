#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "x3sat/analysis.hpp"

#include <cmath>
#include <vector>

using namespace x3sat;

TEST_CASE("branching numbers of the worst-case recurrences") {
  CHECK(std::abs(branching_number({6, 4}) - 1.15096) < 1e-4);
  CHECK(std::abs(branching_number({5, 5}) - 1.14870) < 1e-4);
  CHECK(std::abs(branching_number({7, 3}) - 1.15855) < 1e-4);
}

TEST_CASE("closed forms") {
  CHECK(std::abs(branching_number({1, 1}) - 2.0) < 1e-9);
  for (int r = 1; r <= 12; ++r) CHECK(std::abs(branching_number({r, r}) - std::pow(2.0, 1.0 / r)) < 1e-9);
  CHECK(std::abs(branching_number({1, 1, 1}) - 3.0) < 1e-9);
  CHECK(branching_number({5}) == 1.0);
  // Golden ratio for (1,2).
  CHECK(std::abs(branching_number({1, 2}) - (1 + std::sqrt(5.0)) / 2) < 1e-9);
}

TEST_CASE("root satisfies the characteristic equation") {
  for (int a = 1; a <= 10; ++a)
    for (int b = 1; b <= 10; ++b) {
      double x = branching_number({a, b});
      CHECK(std::abs(1 - std::pow(x, -a) - std::pow(x, -b)) < 1e-9);
    }
}

TEST_CASE("branching number decreases as any entry grows") {
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= 12; ++b) {
      CHECK(branching_number({a + 1, b}) < branching_number({a, b}));
      CHECK(branching_number({a, b + 1}) < branching_number({a, b}));
    }
}

TEST_CASE("invalid vectors") {
  std::vector<int> none;
  CHECK_THROWS_AS(branching_number(none), std::invalid_argument);
  CHECK_THROWS_AS(branching_number({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(branching_number({-1}), std::invalid_argument);
}

TEST_CASE("bound_report examples") {
  BranchStats one;
  one.nodes = 1;
  BoundReport r1 = bound_report(one, 10);
  CHECK(r1.pass);
  CHECK(r1.worst_lambda == 1.0);
  CHECK(std::abs(r1.log_ratio - std::log(2.0) / 10) < 1e-12);

  BranchStats six_four;
  six_four.nodes = 3;
  six_four.records = {{"5", 6, 4}, {"5", 4, 6}, {"5", 6, 4}};
  CHECK(std::abs(bound_report(six_four, 20).worst_lambda - 1.15096) < 1e-4);

  BoundReport leaf = bound_report(BranchStats{}, 7);
  CHECK(leaf.pass);
  CHECK(leaf.worst_lambda == 1.0);
  CHECK(leaf.log_ratio == 0.0);

  BranchStats many;
  many.nodes = 1000;
  CHECK_FALSE(bound_report(many, 10).pass);
  CHECK(bound_report(BranchStats{}, 0).pass);
  CHECK_FALSE(bound_report(one, 0).pass);
}
