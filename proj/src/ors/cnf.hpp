#pragma once

#include <optional>
#include <vector>

#include "ors/numbers.hpp"

namespace ors {

// One literal: variable index in [0, variable_count), polarity true for the
// positive literal.
struct Literal {
  int var = 0;
  bool positive = true;

  bool operator==(const Literal&) const = default;
};

struct Clause {
  std::vector<Literal> literals;

  bool operator==(const Clause&) const = default;
};

// CNF formula with clauses of bounded width. `weights`, when present, holds
// one non-negative weight per clause (the cost of leaving it unsatisfied).
struct CnfFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;
  std::optional<std::vector<BigInt>> weights;

  int max_clause_size() const;
  bool is_weighted() const { return weights.has_value(); }
};

// Throws invalid_argument on out-of-range variables, weight-list length
// mismatch, or negative weights.
void check_cnf(const CnfFormula& f);

// True iff `truth` (size = variable_count) satisfies every clause.
bool satisfies(const CnfFormula& f, const std::vector<bool>& truth);

// Sum of weights of clauses not satisfied by `truth` (unweighted clauses
// count 1 each).
BigInt unsatisfied_weight(const CnfFormula& f, const std::vector<bool>& truth);

}  // namespace ors
