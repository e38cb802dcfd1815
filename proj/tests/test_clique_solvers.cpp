#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ors/clique_solvers.hpp"
#include "ors/error.hpp"
#include "ors/generators.hpp"
#include "ors/reductions.hpp"
#include "support/oracles.hpp"

using ors::Assignment;
using ors::PartiteGraph;
using ors::VertexId;

namespace {

PartiteGraph complete_partite(int n, int m) {
  return ors::random_partite(n, m, 1.0, 0);
}

}  // namespace

TEST_CASE("complete graphs are feasible with the lexicographically least witness") {
  const PartiteGraph g = complete_partite(3, 2);
  const auto out = ors::exact_clique_decision(g);
  REQUIRE(out.feasible);
  REQUIRE(out.witness.has_value());
  for (int i = 0; i < 3; ++i) {
    CHECK(out.witness->picks.at(i) == g.group(i).front());
  }
  CHECK(ors::is_clique(g, *out.witness));
}

TEST_CASE("an edgeless two-group graph is infeasible") {
  PartiteGraph g({{0}, {1}}, {});
  CHECK_FALSE(ors::exact_clique_decision(g).feasible);
}

TEST_CASE("the two-coloring reduction of a triangle has no clique") {
  ors::ColoringInstance triangle;
  triangle.vertex_count = 3;
  triangle.edges = {{0, 1}, {0, 2}, {1, 2}};
  triangle.colors = 2;
  REQUIRE_FALSE(testsup::colorable_oracle(3, triangle.edges, 2));
  CHECK_FALSE(
      ors::exact_clique_decision(ors::coloring_to_partite(triangle)).feasible);
}

TEST_CASE("decision verdicts match exhaustive enumeration on random graphs") {
  int feasible_count = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const PartiteGraph g =
        ors::random_partite(4, 3, 0.55 + 0.01 * static_cast<double>(seed % 30),
                            seed);
    const auto out = ors::exact_clique_decision(g);
    CHECK(out.feasible == testsup::clique_oracle(g));
    if (out.feasible) {
      ++feasible_count;
      CHECK(ors::is_clique(g, *out.witness));
    }
  }
  CHECK(feasible_count > 0);
  CHECK(feasible_count < 120);
}

TEST_CASE("the witness never changes across repeated runs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PartiteGraph g = ors::random_partite(5, 3, 0.7, seed);
    const auto first = ors::exact_clique_decision(g);
    const auto second = ors::exact_clique_decision(g);
    CHECK(first.feasible == second.feasible);
    if (first.feasible) CHECK(first.witness->picks == second.witness->picks);
  }
}

TEST_CASE("two-vertex-group path agrees with the exact solver") {
  const PartiteGraph complete = complete_partite(3, 2);
  CHECK(ors::solve_partite_m2(complete).feasible);

  PartiteGraph no_cross({{0, 1}, {2, 3}}, {});
  CHECK_FALSE(ors::solve_partite_m2(no_cross).feasible);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const PartiteGraph g = ors::random_partite(10, 2, 0.88, seed);
    const auto via_sat = ors::solve_partite_m2(g);
    const auto exact = ors::exact_clique_decision(g);
    CHECK(via_sat.feasible == exact.feasible);
    if (via_sat.feasible) CHECK(ors::is_clique(g, *via_sat.witness));
  }
}

TEST_CASE("groups larger than two are an input error for the 2-SAT path") {
  CHECK_THROWS_AS(ors::solve_partite_m2(complete_partite(2, 3)), ors::Error);
}

TEST_CASE("partial clique of a complete graph picks every group") {
  const auto out = ors::max_partial_clique(complete_partite(4, 2));
  REQUIRE(out.feasible);
  CHECK(*out.objective == 4);
  CHECK(out.witness->picks.size() == 4);
}

TEST_CASE("partial clique of an edgeless graph is a single vertex") {
  PartiteGraph g({{0, 1}, {2}, {3}}, {});
  const auto out = ors::max_partial_clique(g);
  REQUIRE(out.feasible);
  CHECK(*out.objective == 1);
}

TEST_CASE("partial clique objective matches brute force on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PartiteGraph g = ors::random_partite(6, 3, 0.5, seed);
    const auto out = ors::max_partial_clique(g);
    REQUIRE(out.feasible);
    CHECK(*out.objective == testsup::max_partial_oracle(g));
    // The witness itself must be pairwise adjacent.
    const auto& picks = out.witness->picks;
    for (auto it = picks.begin(); it != picks.end(); ++it) {
      for (auto jt = std::next(it); jt != picks.end(); ++jt) {
        CHECK(g.has_edge(it->second, jt->second));
      }
    }
  }
}

TEST_CASE("a tiny budget is a resource error, not a wrong answer") {
  const PartiteGraph g = complete_partite(8, 3);
  try {
    (void)ors::max_partial_clique(g, 16);
    FAIL("expected a budget failure");
  } catch (const ors::Error& e) {
    CHECK(e.code() == ors::Errc::budget_exceeded);
  }
}
