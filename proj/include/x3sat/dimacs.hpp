#pragma once

#include "x3sat/formula.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace x3sat {

enum class HeaderFormat {
  X3sat,      // only `p x3sat <n> <m>`
  AcceptCnf,  // also `p cnf <n> <m>`, read under exact-one semantics
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

Formula parse_dimacs(std::istream& in, HeaderFormat format = HeaderFormat::X3sat);
Formula parse_dimacs(std::string_view text, HeaderFormat format = HeaderFormat::X3sat);

// Clauses by id, literals by (variable, sign); header uses declared_vars().
std::string serialize_dimacs(const Formula& f);

// `v 1 -2 3 0` over variables 1..n (missing variables print as false).
std::string format_model(const Assignment& a, int n);

} // namespace x3sat
