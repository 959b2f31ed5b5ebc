#include "x3sat/reconstruction.hpp"

#include <type_traits>

namespace x3sat {

bool literal_value(const Assignment& a, Literal l) {
  auto it = a.find(l.var());
  bool v = it != a.end() && it->second;
  return l.holds(v);
}

void ReconstructionLog::append(const ReconstructionLog& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

Assignment ReconstructionLog::replay(Assignment model) const {
  for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
    std::visit(
        [&](const auto& r) {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, Bind>) {
            model[r.var] = r.value;
          } else if constexpr (std::is_same_v<R, Alias>) {
            model[r.var] = literal_value(model, r.definition);
          } else if constexpr (std::is_same_v<R, Free>) {
            model.try_emplace(r.var, r.value);
          } else {
            bool none = true;
            for (Literal o : r.others) none = none && !literal_value(model, o);
            model[r.literal.var()] = r.literal.holds(true) == none;
          }
        },
        *it);
  }
  return model;
}

} // namespace x3sat
