#include "ors/cnf.hpp"

#include <algorithm>
#include <string>

#include "ors/error.hpp"

namespace ors {

int CnfFormula::max_clause_size() const {
  std::size_t m = 0;
  for (const auto& c : clauses) m = std::max(m, c.literals.size());
  return static_cast<int>(m);
}

void check_cnf(const CnfFormula& f) {
  if (f.variable_count < 0) {
    fail(Errc::invalid_argument, "negative variable count");
  }
  for (const auto& c : f.clauses) {
    for (const auto& lit : c.literals) {
      if (lit.var < 0 || lit.var >= f.variable_count) {
        fail(Errc::invalid_argument,
             "literal references undeclared variable " +
                 std::to_string(lit.var));
      }
    }
  }
  if (f.weights) {
    if (f.weights->size() != f.clauses.size()) {
      fail(Errc::invalid_argument,
           "clause weight list has " + std::to_string(f.weights->size()) +
               " entries for " + std::to_string(f.clauses.size()) + " clauses");
    }
    for (const auto& w : *f.weights) {
      if (w < 0) fail(Errc::invalid_argument, "negative clause weight");
    }
  }
}

static bool clause_satisfied(const Clause& c, const std::vector<bool>& truth) {
  for (const auto& lit : c.literals) {
    if (truth[lit.var] == lit.positive) return true;
  }
  return false;
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& truth) {
  if (static_cast<int>(truth.size()) != f.variable_count) {
    fail(Errc::invalid_argument, "truth assignment size mismatch");
  }
  for (const auto& c : f.clauses) {
    if (!clause_satisfied(c, truth)) return false;
  }
  return true;
}

BigInt unsatisfied_weight(const CnfFormula& f, const std::vector<bool>& truth) {
  if (static_cast<int>(truth.size()) != f.variable_count) {
    fail(Errc::invalid_argument, "truth assignment size mismatch");
  }
  BigInt total = 0;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (!clause_satisfied(f.clauses[i], truth)) {
      total += f.weights ? (*f.weights)[i] : BigInt(1);
    }
  }
  return total;
}

}  // namespace ors
