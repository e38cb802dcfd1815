#pragma once

#include <cstdint>
#include <vector>

#include "ors/arrangement.hpp"
#include "ors/cnf.hpp"
#include "ors/geometry.hpp"
#include "ors/partite_graph.hpp"

namespace ors {

// All generators are pure functions of (params, seed). Each random decision
// draws from its own named substream, so adding draws to one generator never
// perturbs another.

// Uniform random rotations via normalized 4-component Gaussian quaternions.
std::vector<Orientation> random_orientations(int n, std::uint64_t seed);

// Planted common-line instance: true angle pairs of n random orientations,
// each perturbed by uniform +-noise_angle, hidden among l-1 uniform decoy
// pairs per pair of projections. Decoys landing within twice the reference
// verification tolerance (1e-6) of the true pair (or its mirror) are
// redrawn, so the zero-noise ground truth is unambiguous.
struct PlantedCircleInstance {
  LocalCircleInstance instance;
  std::vector<Orientation> ground_truth;
  std::uint64_t seed = 0;
  int n = 0;
  int l = 1;
  double noise_angle = 0;
};

PlantedCircleInstance planted_common_line_instance(int n, int l,
                                                   double noise_angle,
                                                   std::uint64_t seed);

// Partite graph with a guaranteed n-clique: one planted pick per group, all
// planted pairs connected, every other cross pair present independently
// with probability edge_prob. Vertex ids are dense, group i = [i*m, (i+1)*m).
struct PlantedPartiteInstance {
  PartiteGraph graph;
  Assignment ground_truth;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 1;
  double edge_prob = 0;
};

PlantedPartiteInstance planted_partite_clique(int n, int m, double edge_prob,
                                              std::uint64_t seed);

// Complete weighted graph from points in [0,1]^dim: weight = round(S *
// euclidean_distance^power) with S = 10^6. Powered metrics satisfy the
// relaxed triangle inequality with factor beta = 2^(power-1) (plus rounding
// slack), which the instance declares.
struct MetricInstance {
  WeightedPartiteGraph graph;
  BigInt beta;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 1;
  int dim = 3;
  int power = 1;
};

inline constexpr long long kMetricWeightScale = 1'000'000;

MetricInstance metric_weighted_instance(int n, int m, int dim, int power,
                                        std::uint64_t seed);

// Uniform width-m clauses over distinct variables with coin-flip polarities.
CnfFormula random_cnf(int vars, int clauses, int m, std::uint64_t seed);

// Each cross pair present independently with probability edge_prob.
PartiteGraph random_partite(int n, int m, double edge_prob, std::uint64_t seed);

}  // namespace ors
