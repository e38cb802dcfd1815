#pragma once

#include <utility>
#include <vector>

#include "ors/cnf.hpp"
#include "ors/partite_graph.hpp"

namespace ors {

// k-colorability input: a simple undirected graph and a color count.
struct ColoringInstance {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  int colors = 1;
};

// One group of `colors` vertices per original vertex (vertex i, color c gets
// id i*colors + c); a cross pair is an edge unless it assigns the same color
// to two adjacent original vertices. The output has an n-clique iff the input
// is k-colorable.
PartiteGraph coloring_to_partite(const ColoringInstance& c);

// Groups of size <= 2 become one boolean variable each (true = the group's
// second vertex). Every missing cross pair {v_i^a, v_j^b} contributes the
// clause (u_i = 1-a) v (u_j = 1-b); size-1 groups are pinned to their only
// vertex by a unit clause. Satisfiable iff the graph has an n-clique.
CnfFormula partite2_to_2sat(const PartiteGraph& g);

// Inverse gadget: one 2-vertex group per variable (variable v gets ids 2v,
// 2v+1; index a means "v = a"); a cross pair is absent iff setting the two
// variables accordingly falsifies some clause outright. Requires >= 2
// variables so single-variable clauses have a pair to live on.
PartiteGraph sat2_to_partite(const CnfFormula& f);

// Reads a 2-SAT witness back out of a graph built by sat2_to_partite (or any
// graph with one group per variable): picked in-group index = truth value.
Assignment assignment_from_truth(const PartiteGraph& g,
                                 const std::vector<bool>& truth);
std::vector<bool> truth_from_assignment(const PartiteGraph& g,
                                        const Assignment& a);

// Weighted 2-SAT -> minimum-weight clique. Complete 2,n-partite graph whose
// clique weight equals the total weight of clauses the corresponding truth
// assignment leaves unsatisfied. Each clause's weight is charged to exactly
// one group pair: its own pair of variables, or (var, smallest other
// variable) for single-variable clauses. Missing clause weights count as 1.
WeightedPartiteGraph mw2sat_to_mwclique(const CnfFormula& f);

// Minimum-weight clique -> weighted 2-SAT: edge {v_i^a, v_j^b} of weight w
// becomes clause (u_i = 1-a) v (u_j = 1-b) with weight w, falsified exactly
// when the assignment picks that edge. Size-1 groups are pinned by a unit
// clause heavier than the whole graph. Minimum unsatisfied-clause weight
// equals minimum clique weight.
CnfFormula mwclique_to_mw2sat(const WeightedPartiteGraph& g);

// 2^(n^k), the gap magnitude used below.
BigInt gap_weight(int n, int k);

// Completes the graph with weight 0 on original edges and 2^(n^k) on every
// other cross pair, so the minimum clique weight is 0 iff the input has an
// n-clique and at least 2^(n^k) otherwise.
WeightedPartiteGraph clique_gap_weights(const PartiteGraph& g, int k);

}  // namespace ors
