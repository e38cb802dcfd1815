#pragma once

#include <optional>
#include <vector>

#include "ors/numbers.hpp"
#include "ors/partite_graph.hpp"

namespace ors {

// Result of any solver. Graph problems fill `witness`, satisfiability
// problems fill `truth`; objectives appear exactly for weighted or
// cardinality problems.
struct SolveOutcome {
  bool feasible = false;
  std::optional<Assignment> witness;
  std::optional<std::vector<bool>> truth;
  std::optional<BigInt> objective;

  static SolveOutcome infeasible() { return {}; }
};

}  // namespace ors
