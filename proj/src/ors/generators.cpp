#include "ors/generators.hpp"

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "ors/error.hpp"
#include "ors/rng.hpp"

namespace ors {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kDecoyExclusion = 2e-6;  // 2x the reference verify tolerance

std::vector<std::vector<VertexId>> dense_groups(int n, int m) {
  std::vector<std::vector<VertexId>> groups(n);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < m; ++a) groups[i].push_back(i * m + a);
  }
  return groups;
}

}  // namespace

std::vector<Orientation> random_orientations(int n, std::uint64_t seed) {
  if (n < 1) fail(Errc::invalid_argument, "orientation count must be >= 1");
  SplitRng rng(seed, "orientations");
  std::vector<Orientation> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    double w, x, y, z;
    do {
      w = rng.next_normal();
      x = rng.next_normal();
      y = rng.next_normal();
      z = rng.next_normal();
    } while (std::sqrt(w * w + x * x + y * y + z * z) < 1e-6);
    out.push_back(Orientation{rotation_from_quaternion(w, x, y, z)});
  }
  return out;
}

PlantedCircleInstance planted_common_line_instance(int n, int l,
                                                   double noise_angle,
                                                   std::uint64_t seed) {
  if (n < 2) fail(Errc::invalid_argument, "need >= 2 projections");
  if (l < 1) fail(Errc::invalid_argument, "l must be >= 1");
  if (noise_angle < 0) fail(Errc::invalid_argument, "noise must be >= 0");

  PlantedCircleInstance out;
  out.seed = seed;
  out.n = n;
  out.l = l;
  out.noise_angle = noise_angle;
  out.ground_truth = random_orientations(n, seed);
  out.instance.n = n;
  out.instance.l = l;

  SplitRng noise(seed, "noise");
  SplitRng decoys(seed, "decoys");
  SplitRng shuffle(seed, "shuffle");

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto [ai, aj] =
          common_line_angles(out.ground_truth[i], out.ground_truth[j]);
      const double di = (2 * noise.next_unit() - 1) * noise_angle;
      const double dj = (2 * noise.next_unit() - 1) * noise_angle;
      std::vector<std::pair<double, double>> candidates;
      candidates.emplace_back(normalize_angle(ai + di), normalize_angle(aj + dj));

      const double mi = normalize_angle(ai + kPi);
      const double mj = normalize_angle(aj + kPi);
      while (static_cast<int>(candidates.size()) < l) {
        const double bi = decoys.next_unit() * kTwoPi;
        const double bj = decoys.next_unit() * kTwoPi;
        const bool near_true = circular_distance(bi, ai) <= kDecoyExclusion &&
                               circular_distance(bj, aj) <= kDecoyExclusion;
        const bool near_mirror = circular_distance(bi, mi) <= kDecoyExclusion &&
                                 circular_distance(bj, mj) <= kDecoyExclusion;
        if (near_true || near_mirror) continue;
        candidates.emplace_back(bi, bj);
      }
      for (std::size_t t = candidates.size(); t > 1; --t) {
        std::swap(candidates[t - 1], candidates[shuffle.next_below(t)]);
      }
      out.instance.allowed[{i, j}] = std::move(candidates);
    }
  }
  return out;
}

PlantedPartiteInstance planted_partite_clique(int n, int m, double edge_prob,
                                              std::uint64_t seed) {
  if (n < 1 || m < 1) fail(Errc::invalid_argument, "need n >= 1 and m >= 1");
  if (edge_prob < 0 || edge_prob > 1) {
    fail(Errc::invalid_argument, "edge_prob must lie in [0,1]");
  }

  PlantedPartiteInstance out;
  out.seed = seed;
  out.n = n;
  out.m = m;
  out.edge_prob = edge_prob;

  SplitRng plant(seed, "plant");
  std::vector<VertexId> planted(n);
  for (int i = 0; i < n; ++i) {
    planted[i] = i * m + static_cast<int>(plant.next_below(m));
    out.ground_truth.picks[i] = planted[i];
  }

  SplitRng edges_rng(seed, "edges");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          const VertexId u = i * m + a;
          const VertexId v = j * m + b;
          const bool is_planted = u == planted[i] && v == planted[j];
          if (is_planted || edges_rng.next_bool(edge_prob)) {
            edges.emplace_back(u, v);
          }
        }
      }
    }
  }
  out.graph = PartiteGraph(dense_groups(n, m), edges, m);
  return out;
}

MetricInstance metric_weighted_instance(int n, int m, int dim, int power,
                                        std::uint64_t seed) {
  if (n < 1 || m < 1) fail(Errc::invalid_argument, "need n >= 1 and m >= 1");
  if (dim < 1) fail(Errc::invalid_argument, "dim must be >= 1");
  if (power < 1) fail(Errc::invalid_argument, "power must be >= 1");

  MetricInstance out;
  out.seed = seed;
  out.n = n;
  out.m = m;
  out.dim = dim;
  out.power = power;
  out.beta = BigInt(1) << (power - 1);

  SplitRng points(seed, "points");
  const int total = n * m;
  std::vector<std::vector<double>> embed(total, std::vector<double>(dim));
  for (int v = 0; v < total; ++v) {
    for (int d = 0; d < dim; ++d) embed[v][d] = points.next_unit();
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<std::pair<VertexId, VertexId>, BigInt> weights;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          const VertexId u = i * m + a;
          const VertexId v = j * m + b;
          double sq = 0;
          for (int d = 0; d < dim; ++d) {
            const double diff = embed[u][d] - embed[v][d];
            sq += diff * diff;
          }
          const double w =
              std::pow(std::sqrt(sq), static_cast<double>(power));
          edges.emplace_back(u, v);
          weights[{u, v}] = BigInt(std::llround(
              w * static_cast<double>(kMetricWeightScale)));
        }
      }
    }
  }
  out.graph = WeightedPartiteGraph(
      PartiteGraph(dense_groups(n, m), edges, m), std::move(weights));
  return out;
}

CnfFormula random_cnf(int vars, int clauses, int m, std::uint64_t seed) {
  if (m < 1) fail(Errc::invalid_argument, "clause width must be >= 1");
  if (vars < m) {
    fail(Errc::invalid_argument,
         "need at least as many variables as the clause width");
  }
  if (clauses < 0) fail(Errc::invalid_argument, "clause count must be >= 0");

  SplitRng rng(seed, "cnf");
  CnfFormula f;
  f.variable_count = vars;
  for (int c = 0; c < clauses; ++c) {
    Clause clause;
    std::vector<int> pool(vars);
    for (int v = 0; v < vars; ++v) pool[v] = v;
    for (int t = 0; t < m; ++t) {  // partial Fisher-Yates: m distinct vars
      const std::size_t pick = t + rng.next_below(vars - t);
      std::swap(pool[t], pool[pick]);
      clause.literals.push_back(Literal{pool[t], rng.next_bool(0.5)});
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

PartiteGraph random_partite(int n, int m, double edge_prob,
                            std::uint64_t seed) {
  if (n < 1 || m < 1) fail(Errc::invalid_argument, "need n >= 1 and m >= 1");
  if (edge_prob < 0 || edge_prob > 1) {
    fail(Errc::invalid_argument, "edge_prob must lie in [0,1]");
  }
  SplitRng rng(seed, "edges");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          if (rng.next_bool(edge_prob)) {
            edges.emplace_back(i * m + a, j * m + b);
          }
        }
      }
    }
  }
  return PartiteGraph(dense_groups(n, m), edges, m);
}

}  // namespace ors
