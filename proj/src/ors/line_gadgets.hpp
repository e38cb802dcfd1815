#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ors/arrangement.hpp"
#include "ors/cnf.hpp"
#include "ors/partite_graph.hpp"

namespace ors {

// Partite graph -> constrained line arrangement. Each vertex becomes the
// line y = g*x + h of a general-position dual point (g, h); the instance has
// one line slot per GROUP, and P_ij collects the intersections of line pairs
// whose vertices are adjacent. Some choice of one candidate line per group
// satisfies the instance iff the graph has an n-clique.
struct PartiteLineReduction {
  // Dual point of each vertex, in group-major order.
  std::vector<std::pair<long long, long long>> duals;
  // Candidate lines per instance slot (= per group, one line per vertex).
  std::vector<std::vector<RatLine>> choices;
  LineArrangementInstance instance;
};

PartiteLineReduction partite_to_line_instance(const PartiteGraph& g);

// m-SAT -> constrained line arrangement. Variable i gets one slot with two
// vertical candidates x = 2i and x = 2i+1 (the assignments u_i = 0, 1);
// clause j gets one slot whose candidates are |c_j| horizontal lines, one
// per literal, at globally distinct heights. The (variable i, clause j)
// allowed set holds the crossing of x = 2i+a with the b-th horizontal of c_j
// exactly when u_i = a does not falsify that literal, so a choice realizes
// the instance iff picking one true literal per clause is possible.
// Variable/variable and clause/clause pairs stay unconstrained (they are
// parallel). Requires variable_count > max clause width and clause count > 2
// (the regime where the arrangement forces these orientations).
struct SatLineGadget {
  int variable_count = 0;
  int clause_count = 0;
  std::vector<std::vector<RatLine>> choices;
  LineArrangementInstance instance;
};

SatLineGadget msat_to_line_instance(const CnfFormula& f);

// Exhaustive search over one candidate line per slot; returns the first
// choice (lexicographic in candidate indices) whose lines the exact verifier
// accepts, or nullopt when none exists.
std::optional<std::vector<int>> find_realizing_choice(
    const std::vector<std::vector<RatLine>>& choices,
    const LineArrangementInstance& inst);

}  // namespace ors
