#pragma once

#include <cstdint>

#include "ors/outcome.hpp"
#include "ors/partite_graph.hpp"

namespace ors {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Decides n-clique existence by backtracking group by group, pruning picks
// non-adjacent to any committed pick. A feasible outcome carries the
// lexicographically least clique under (group index, vertex order).
SolveOutcome exact_clique_decision(const PartiteGraph& g);

// Polynomial path for groups of size <= 2: translate to 2-SAT, solve, map
// the truth assignment back to picks. Agrees with exact_clique_decision on
// feasibility.
SolveOutcome solve_partite_m2(const PartiteGraph& g);

// Largest set of pairwise-adjacent picks, at most one per group; exact
// search with a remaining-groups bound. `budget` caps the search-space size
// prod(|V_i|+1); exceeding it is a resource error, never a wrong answer.
// The objective is the number of picks.
SolveOutcome max_partial_clique(const PartiteGraph& g,
                                std::uint64_t budget = kDefaultBudget);

}  // namespace ors
