#pragma once

#include "x3sat/literal.hpp"

#include <map>
#include <variant>
#include <vector>

namespace x3sat {

// Partial truth assignment, keyed by variable.
using Assignment = std::map<Var, bool>;

bool literal_value(const Assignment& a, Literal l);

// Variable fixed to a constant.
struct Bind {
  Var var;
  bool value;
};

// Variable replaced by a literal over another variable (or flipped, when the
// definition is the variable's own complement).
struct Alias {
  Var var;
  Literal definition;
};

// Variable left unconstrained by the rewrite; takes `value` unless something
// later in the log already assigned it.
struct Free {
  Var var;
  bool value;
};

// `literal` is true exactly when every literal in `others` is false. Produced
// when a clause is dropped or rewritten and one of its variables absorbs it.
struct Exclusive {
  Literal literal;
  std::vector<Literal> others;
};

using LogRecord = std::variant<Bind, Alias, Free, Exclusive>;

// Ordered record of eliminations. Replaying it backwards turns a model of the
// rewritten formula into a model of the formula the log started from.
class ReconstructionLog {
public:
  void bind(Var var, bool value) { records_.push_back(Bind{var, value}); }
  void alias(Var var, Literal definition) { records_.push_back(Alias{var, definition}); }
  void free(Var var, bool value = false) { records_.push_back(Free{var, value}); }
  void exclusive(Literal literal, std::vector<Literal> others) {
    records_.push_back(Exclusive{literal, std::move(others)});
  }

  void append(const ReconstructionLog& other);

  const std::vector<LogRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  // Applies the records in reverse order on top of `model`.
  Assignment replay(Assignment model) const;

private:
  std::vector<LogRecord> records_;
};

} // namespace x3sat
