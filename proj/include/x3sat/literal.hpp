#pragma once

#include <compare>
#include <cstdlib>
#include <functional>
#include <ostream>

namespace x3sat {

// Variables are positive integers, 1-based as in DIMACS.
using Var = int;

// Stable clause identifier; survives in-place rewrites of a clause.
using ClauseId = int;

class Literal {
public:
  constexpr Literal() = default;
  constexpr Literal(Var var, bool negated) : code_(negated ? -var : var) {}

  static constexpr Literal positive(Var var) { return Literal(var, false); }
  static constexpr Literal negative(Var var) { return Literal(var, true); }
  static constexpr Literal from_dimacs(int code) { return Literal(code < 0 ? -code : code, code < 0); }

  constexpr Var var() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool negated() const { return code_ < 0; }
  constexpr int dimacs() const { return code_; }

  constexpr Literal operator~() const { return from_dimacs(-code_); }

  // Truth value of the literal when its variable takes `var_value`.
  constexpr bool holds(bool var_value) const { return var_value != negated(); }

  friend constexpr bool operator==(Literal, Literal) = default;

  // Ordered by (variable, sign), positive first.
  friend constexpr std::strong_ordering operator<=>(Literal a, Literal b) {
    if (auto c = a.var() <=> b.var(); c != 0) return c;
    return a.negated() <=> b.negated();
  }

private:
  int code_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Literal l) {
  return os << l.dimacs();
}

} // namespace x3sat

template <>
struct std::hash<x3sat::Literal> {
  std::size_t operator()(x3sat::Literal l) const noexcept { return std::hash<int>{}(l.dimacs()); }
};
