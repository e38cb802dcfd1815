#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ors/cnf.hpp"
#include "ors/error.hpp"
#include "ors/generators.hpp"
#include "ors/two_sat.hpp"
#include "support/oracles.hpp"

using ors::Clause;
using ors::CnfFormula;
using ors::Literal;

TEST_CASE("a single positive clause is satisfiable") {
  CnfFormula f;
  f.variable_count = 2;
  f.clauses.push_back(Clause{{Literal{0, true}, Literal{1, true}}});
  const auto out = ors::two_sat_solve(f);
  REQUIRE(out.feasible);
  REQUIRE(out.truth.has_value());
  CHECK(ors::satisfies(f, *out.truth));
}

TEST_CASE("contradicting unit clauses are infeasible") {
  CnfFormula f;
  f.variable_count = 1;
  f.clauses.push_back(Clause{{Literal{0, true}}});
  f.clauses.push_back(Clause{{Literal{0, false}}});
  CHECK_FALSE(ors::two_sat_solve(f).feasible);
}

TEST_CASE("an empty clause is unsatisfiable by anything") {
  CnfFormula f;
  f.variable_count = 3;
  f.clauses.push_back(Clause{});
  CHECK_FALSE(ors::two_sat_solve(f).feasible);
}

TEST_CASE("an empty formula is satisfiable") {
  CnfFormula f;
  f.variable_count = 4;
  const auto out = ors::two_sat_solve(f);
  REQUIRE(out.feasible);
  CHECK(out.truth->size() == 4);
}

TEST_CASE("clauses wider than 2 are an input error") {
  CnfFormula f;
  f.variable_count = 3;
  f.clauses.push_back(
      Clause{{Literal{0, true}, Literal{1, true}, Literal{2, true}}});
  CHECK_THROWS_AS(ors::two_sat_solve(f), ors::Error);
}

TEST_CASE("implication chains force consistent values") {
  // (x0 -> x1) and (x1 -> x2) as clauses, plus x0 and not-x2: infeasible.
  CnfFormula f;
  f.variable_count = 3;
  f.clauses.push_back(Clause{{Literal{0, false}, Literal{1, true}}});
  f.clauses.push_back(Clause{{Literal{1, false}, Literal{2, true}}});
  f.clauses.push_back(Clause{{Literal{0, true}}});
  f.clauses.push_back(Clause{{Literal{2, false}}});
  CHECK_FALSE(ors::two_sat_solve(f).feasible);
  // Dropping the last clause makes it feasible, and the chain must fire.
  f.clauses.pop_back();
  const auto out = ors::two_sat_solve(f);
  REQUIRE(out.feasible);
  CHECK((*out.truth)[0]);
  CHECK((*out.truth)[1]);
  CHECK((*out.truth)[2]);
}

TEST_CASE("status matches the truth-table oracle on 500 random formulas") {
  int feasible_count = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const CnfFormula f = ors::random_cnf(12, 12, 2, seed);
    const auto out = ors::two_sat_solve(f);
    CHECK(out.feasible == testsup::sat_oracle(f));
    if (out.feasible) {
      ++feasible_count;
      CHECK(ors::satisfies(f, *out.truth));
    }
  }
  // The sweep must exercise both verdicts to mean anything.
  CHECK(feasible_count > 0);
  CHECK(feasible_count < 500);
}

TEST_CASE("solving twice yields the identical witness") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CnfFormula f = ors::random_cnf(10, 14, 2, seed);
    const auto first = ors::two_sat_solve(f);
    const auto second = ors::two_sat_solve(f);
    CHECK(first.feasible == second.feasible);
    if (first.feasible) CHECK(*first.truth == *second.truth);
  }
}
