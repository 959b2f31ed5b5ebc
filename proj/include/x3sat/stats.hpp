#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace x3sat {

struct BranchRecord {
  std::string tag;  // case that produced the node
  int r1 = 0;       // clauses removed on the first side
  int r2 = 0;       // clauses removed on the second side
};

struct BranchStats {
  std::uint64_t nodes = 0;                       // two-way branches and cut splits
  std::map<std::string, std::uint64_t> case_hits;
  std::uint64_t max_depth = 0;
  std::vector<BranchRecord> records;
  std::uint64_t endgame_instances = 0;           // matching calls
  std::uint64_t exhaustive_instances = 0;        // small-formula oracle calls
};

} // namespace x3sat
