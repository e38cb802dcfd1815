#pragma once

#include "ors/cnf.hpp"
#include "ors/outcome.hpp"

namespace ors {

// Satisfiability for clauses of width <= 2 via strongly connected components
// of the implication graph; linear in variables + clauses. Feasible outcomes
// carry a satisfying truth assignment; the witness is deterministic for a
// fixed input. Clauses wider than 2 are an input error; an empty clause makes
// the formula infeasible.
SolveOutcome two_sat_solve(const CnfFormula& f);

}  // namespace ors
