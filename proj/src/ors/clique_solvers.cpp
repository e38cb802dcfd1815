#include "ors/clique_solvers.hpp"

#include <string>
#include <vector>

#include "ors/error.hpp"
#include "ors/reductions.hpp"
#include "ors/two_sat.hpp"

namespace ors {

namespace {

void require_valid(const PartiteGraph& g, const char* who) {
  ValidationReport report = validate_partite(g);
  if (!report.ok()) {
    fail(Errc::invalid_argument,
         std::string(who) + ": invalid graph: " + report.violations.front());
  }
}

bool adjacent_to_all(const PartiteGraph& g, const std::vector<VertexId>& picks,
                     VertexId v) {
  for (VertexId u : picks) {
    if (!g.has_edge(u, v)) return false;
  }
  return true;
}

bool extend_clique(const PartiteGraph& g, int group, std::vector<VertexId>& picks) {
  if (group == g.group_count()) return true;
  for (VertexId v : g.group(group)) {
    if (!adjacent_to_all(g, picks, v)) continue;
    picks.push_back(v);
    if (extend_clique(g, group + 1, picks)) return true;
    picks.pop_back();
  }
  return false;
}

}  // namespace

SolveOutcome exact_clique_decision(const PartiteGraph& g) {
  require_valid(g, "exact_clique_decision");
  std::vector<VertexId> picks;
  picks.reserve(g.group_count());
  if (!extend_clique(g, 0, picks)) return SolveOutcome::infeasible();

  SolveOutcome out;
  out.feasible = true;
  Assignment a;
  for (int i = 0; i < g.group_count(); ++i) a.picks[i] = picks[i];
  out.witness = std::move(a);
  return out;
}

SolveOutcome solve_partite_m2(const PartiteGraph& g) {
  require_valid(g, "solve_partite_m2");
  for (int i = 0; i < g.group_count(); ++i) {
    if (g.group(i).size() > 2) {
      fail(Errc::invalid_argument,
           "solve_partite_m2: group " + std::to_string(i) +
               " has more than 2 vertices");
    }
  }
  const CnfFormula f = partite2_to_2sat(g);
  SolveOutcome sat = two_sat_solve(f);
  if (!sat.feasible) return SolveOutcome::infeasible();

  SolveOutcome out;
  out.feasible = true;
  out.witness = assignment_from_truth(g, *sat.truth);
  return out;
}

namespace {

struct PartialSearch {
  const PartiteGraph& g;
  std::vector<VertexId> current;        // picked ids, group order
  std::vector<int> current_groups;      // matching group indices
  int best_count = -1;
  Assignment best;

  void run(int group, int count) {
    const int n = g.group_count();
    if (group == n) {
      if (count > best_count) {
        best_count = count;
        best.picks.clear();
        for (std::size_t t = 0; t < current.size(); ++t) {
          best.picks[current_groups[t]] = current[t];
        }
      }
      return;
    }
    if (count + (n - group) <= best_count) return;  // cannot improve
    for (VertexId v : g.group(group)) {
      bool ok = true;
      for (VertexId u : current) {
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.push_back(v);
      current_groups.push_back(group);
      run(group + 1, count + 1);
      current.pop_back();
      current_groups.pop_back();
    }
    run(group + 1, count);  // skip this group
  }
};

}  // namespace

SolveOutcome max_partial_clique(const PartiteGraph& g, std::uint64_t budget) {
  require_valid(g, "max_partial_clique");
  if (budget == 0) fail(Errc::invalid_argument, "budget must be positive");
  long double space = 1.0L;
  for (const auto& group : g.groups()) {
    space *= static_cast<long double>(group.size() + 1);
    if (space > static_cast<long double>(budget)) {
      fail(Errc::budget_exceeded,
           "max_partial_clique: search space exceeds budget of " +
               std::to_string(budget) + " partial assignments");
    }
  }

  PartialSearch search{g, {}, {}, -1, {}};
  search.run(0, 0);

  SolveOutcome out;
  out.feasible = true;
  out.witness = std::move(search.best);
  out.objective = BigInt(search.best_count);
  return out;
}

}  // namespace ors
