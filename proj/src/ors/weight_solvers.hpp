#pragma once

#include <cstdint>

#include "ors/clique_solvers.hpp"
#include "ors/outcome.hpp"
#include "ors/partite_graph.hpp"

namespace ors {

// Minimum-weight star approximation: every vertex is tried as the center,
// its star weight being the sum over the other groups of the cheapest edge
// into that group; the per-group minimizers of the best center form the
// returned assignment. The objective is the weight of that induced clique,
// not the star sum. Ties (center and minimizers) break toward the lowest
// (group index, vertex position).
SolveOutcome minimum_weight_star(const WeightedPartiteGraph& g);

// Global optimum via branch-and-bound over groups with the partial clique
// weight as lower bound; returns the lexicographically least optimal
// assignment. `budget` caps prod |V_i|; exceeding it is a resource error.
SolveOutcome exact_min_weight_clique(const WeightedPartiteGraph& g,
                                     std::uint64_t budget = kDefaultBudget);

}  // namespace ors
