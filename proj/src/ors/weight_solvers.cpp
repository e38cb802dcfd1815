#include "ors/weight_solvers.hpp"

#include <optional>
#include <string>
#include <vector>

#include "ors/error.hpp"

namespace ors {

SolveOutcome minimum_weight_star(const WeightedPartiteGraph& g) {
  g.require_complete();
  const PartiteGraph& base = g.base();
  const int n = base.group_count();

  std::optional<BigInt> best_star;
  int best_group = -1;
  VertexId best_center = -1;

  for (int gi = 0; gi < n; ++gi) {
    for (VertexId v : base.group(gi)) {
      BigInt star = 0;
      for (int gj = 0; gj < n; ++gj) {
        if (gj == gi) continue;
        std::optional<BigInt> cheapest;
        for (VertexId u : base.group(gj)) {
          const BigInt& w = g.weight(u, v);
          if (!cheapest || w < *cheapest) cheapest = w;
        }
        star += *cheapest;
      }
      if (!best_star || star < *best_star) {  // strict: earliest center wins ties
        best_star = std::move(star);
        best_group = gi;
        best_center = v;
      }
    }
  }

  Assignment a;
  a.picks[best_group] = best_center;
  for (int gj = 0; gj < n; ++gj) {
    if (gj == best_group) continue;
    std::optional<BigInt> cheapest;
    VertexId pick = -1;
    for (VertexId u : base.group(gj)) {
      const BigInt& w = g.weight(u, best_center);
      if (!cheapest || w < *cheapest) {
        cheapest = w;
        pick = u;
      }
    }
    a.picks[gj] = pick;
  }

  SolveOutcome out;
  out.feasible = true;
  out.objective = clique_weight(g, a);
  out.witness = std::move(a);
  return out;
}

namespace {

struct WeightSearch {
  const WeightedPartiteGraph& g;
  std::vector<VertexId> current;
  std::optional<BigInt> best_weight;
  std::vector<VertexId> best;

  // Non-negative weights make the partial clique weight a valid lower bound.
  // Pruning on >= keeps the incumbent, which is lexicographically earliest
  // among optima because improvements must be strict.
  void run(int group, const BigInt& partial) {
    const PartiteGraph& base = g.base();
    if (best_weight && partial >= *best_weight) return;
    if (group == base.group_count()) {
      best_weight = partial;
      best = current;
      return;
    }
    for (VertexId v : base.group(group)) {
      BigInt extended = partial;
      for (VertexId u : current) extended += g.weight(u, v);
      current.push_back(v);
      run(group + 1, extended);
      current.pop_back();
    }
  }
};

}  // namespace

SolveOutcome exact_min_weight_clique(const WeightedPartiteGraph& g,
                                     std::uint64_t budget) {
  g.require_complete();
  if (budget == 0) fail(Errc::invalid_argument, "budget must be positive");
  long double space = 1.0L;
  for (const auto& group : g.base().groups()) {
    space *= static_cast<long double>(group.size());
    if (space > static_cast<long double>(budget)) {
      fail(Errc::budget_exceeded,
           "exact_min_weight_clique: search space exceeds budget of " +
               std::to_string(budget) + " assignments");
    }
  }

  WeightSearch search{g, {}, std::nullopt, {}};
  search.run(0, BigInt(0));

  SolveOutcome out;
  out.feasible = true;
  Assignment a;
  for (int i = 0; i < g.base().group_count(); ++i) a.picks[i] = search.best[i];
  out.witness = std::move(a);
  out.objective = std::move(*search.best_weight);
  return out;
}

}  // namespace ors
