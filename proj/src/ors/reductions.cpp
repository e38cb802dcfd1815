#include "ors/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "ors/error.hpp"

namespace ors {

namespace {

void require_valid(const PartiteGraph& g, const char* who) {
  ValidationReport report = validate_partite(g);
  if (!report.ok()) {
    fail(Errc::invalid_argument,
         std::string(who) + ": invalid graph: " + report.violations.front());
  }
}

void require_group_sizes_at_most_2(const PartiteGraph& g, const char* who) {
  for (int i = 0; i < g.group_count(); ++i) {
    if (g.group(i).size() > 2) {
      fail(Errc::invalid_argument,
           std::string(who) + ": group " + std::to_string(i) +
               " has more than 2 vertices");
    }
  }
}

// True iff every literal of `c` is over a variable in `value` and evaluates
// to false there. Empty clauses are falsified by anything.
bool falsified_by(const Clause& c, const std::map<int, bool>& value) {
  for (const auto& lit : c.literals) {
    auto it = value.find(lit.var);
    if (it == value.end()) return false;
    if (it->second == lit.positive) return false;
  }
  return true;
}

}  // namespace

PartiteGraph coloring_to_partite(const ColoringInstance& c) {
  if (c.vertex_count < 1) {
    fail(Errc::invalid_argument, "coloring instance needs at least one vertex");
  }
  if (c.colors < 1) fail(Errc::invalid_argument, "color count must be >= 1");
  std::unordered_set<std::uint64_t> adjacent;
  for (auto [u, v] : c.edges) {
    if (u < 0 || v < 0 || u >= c.vertex_count || v >= c.vertex_count) {
      fail(Errc::invalid_argument, "coloring edge endpoint out of range");
    }
    if (u == v) fail(Errc::invalid_argument, "self-loop in coloring instance");
    adjacent.insert(edge_key(u, v));
  }

  const int k = c.colors;
  std::vector<std::vector<VertexId>> groups(c.vertex_count);
  for (int i = 0; i < c.vertex_count; ++i) {
    for (int a = 0; a < k; ++a) groups[i].push_back(i * k + a);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < c.vertex_count; ++i) {
    for (int j = i + 1; j < c.vertex_count; ++j) {
      const bool constrained = adjacent.count(edge_key(i, j)) != 0;
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if (!constrained || a != b) {
            edges.emplace_back(i * k + a, j * k + b);
          }
        }
      }
    }
  }
  return PartiteGraph(std::move(groups), edges, k);
}

CnfFormula partite2_to_2sat(const PartiteGraph& g) {
  require_valid(g, "partite2_to_2sat");
  require_group_sizes_at_most_2(g, "partite2_to_2sat");

  CnfFormula f;
  f.variable_count = g.group_count();
  for (int i = 0; i < g.group_count(); ++i) {
    if (g.group(i).size() == 1) {
      f.clauses.push_back({{Literal{i, false}}});  // pin u_i = 0
    }
  }
  for (int i = 0; i < g.group_count(); ++i) {
    for (int j = i + 1; j < g.group_count(); ++j) {
      for (int a = 0; a < static_cast<int>(g.group(i).size()); ++a) {
        for (int b = 0; b < static_cast<int>(g.group(j).size()); ++b) {
          if (!g.has_edge(g.group(i)[a], g.group(j)[b])) {
            f.clauses.push_back(
                {{Literal{i, a == 0}, Literal{j, b == 0}}});
          }
        }
      }
    }
  }
  return f;
}

PartiteGraph sat2_to_partite(const CnfFormula& f) {
  check_cnf(f);
  if (f.max_clause_size() > 2) {
    fail(Errc::invalid_argument, "sat2_to_partite requires clause width <= 2");
  }
  if (f.variable_count < 2) {
    fail(Errc::invalid_argument,
         "sat2_to_partite needs >= 2 variables so every clause has a group "
         "pair to constrain");
  }
  const int n = f.variable_count;
  std::vector<std::vector<VertexId>> groups(n);
  for (int v = 0; v < n; ++v) groups[v] = {2 * v, 2 * v + 1};

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const std::map<int, bool> value{{i, a == 1}, {j, b == 1}};
          bool blocked = false;
          for (const auto& c : f.clauses) {
            if (falsified_by(c, value)) {
              blocked = true;
              break;
            }
          }
          if (!blocked) edges.emplace_back(2 * i + a, 2 * j + b);
        }
      }
    }
  }
  return PartiteGraph(std::move(groups), edges, 2);
}

Assignment assignment_from_truth(const PartiteGraph& g,
                                 const std::vector<bool>& truth) {
  if (static_cast<int>(truth.size()) != g.group_count()) {
    fail(Errc::invalid_argument,
         "truth assignment size does not match group count");
  }
  Assignment a;
  for (int i = 0; i < g.group_count(); ++i) {
    const int idx = truth[i] ? 1 : 0;
    if (idx >= static_cast<int>(g.group(i).size())) {
      fail(Errc::invalid_argument,
           "truth assignment selects a missing vertex in group " +
               std::to_string(i));
    }
    a.picks[i] = g.group(i)[idx];
  }
  return a;
}

std::vector<bool> truth_from_assignment(const PartiteGraph& g,
                                        const Assignment& a) {
  if (static_cast<int>(a.picks.size()) != g.group_count()) {
    fail(Errc::invalid_argument, "assignment must pick in every group");
  }
  std::vector<bool> truth(g.group_count(), false);
  for (auto [gi, v] : a.picks) {
    const auto& members = g.group(gi);
    auto it = std::find(members.begin(), members.end(), v);
    if (it == members.end()) {
      fail(Errc::invalid_argument, "assignment pick outside its group");
    }
    truth[gi] = (it - members.begin()) == 1;
  }
  return truth;
}

WeightedPartiteGraph mw2sat_to_mwclique(const CnfFormula& f) {
  check_cnf(f);
  if (f.max_clause_size() > 2) {
    fail(Errc::invalid_argument,
         "mw2sat_to_mwclique requires clause width <= 2");
  }
  if (f.variable_count < 2) {
    fail(Errc::invalid_argument,
         "mw2sat_to_mwclique needs >= 2 variables so every clause has a "
         "group pair to carry its weight");
  }
  const int n = f.variable_count;
  std::vector<std::vector<VertexId>> groups(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int v = 0; v < n; ++v) groups[v] = {2 * v, 2 * v + 1};
  std::map<std::pair<VertexId, VertexId>, BigInt> weight;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          edges.emplace_back(2 * i + a, 2 * j + b);
          weight[{2 * i + a, 2 * j + b}] = 0;
        }
      }
    }
  }

  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    const Clause& c = f.clauses[ci];
    const BigInt w = f.weights ? (*f.weights)[ci] : BigInt(1);
    std::set<int> vars;
    for (const auto& lit : c.literals) vars.insert(lit.var);

    // Charge the clause to exactly one group pair, over every vertex pair
    // whose induced partial assignment falsifies it.
    if (vars.size() == 2) {
      const int i = *vars.begin();
      const int j = *std::next(vars.begin());
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          if (falsified_by(c, {{i, a == 1}, {j, b == 1}})) {
            weight[{2 * i + a, 2 * j + b}] += w;
          }
        }
      }
    } else if (vars.size() == 1) {
      const int i = *vars.begin();
      const int p = (i == 0) ? 1 : 0;  // smallest other variable
      for (int a = 0; a < 2; ++a) {
        if (!falsified_by(c, {{i, a == 1}})) continue;
        for (int b = 0; b < 2; ++b) {
          VertexId u = 2 * i + a, v = 2 * p + b;
          if (u > v) std::swap(u, v);
          weight[{u, v}] += w;
        }
      }
    } else {  // empty clause: unavoidable, park it on pair (0,1)
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) weight[{a, 2 + b}] += w;
      }
    }
  }
  return WeightedPartiteGraph(PartiteGraph(std::move(groups), edges, 2),
                              std::move(weight));
}

CnfFormula mwclique_to_mw2sat(const WeightedPartiteGraph& g) {
  require_valid(g.base(), "mwclique_to_mw2sat");
  require_group_sizes_at_most_2(g.base(), "mwclique_to_mw2sat");
  g.require_complete();

  const PartiteGraph& base = g.base();
  const int n = base.group_count();
  CnfFormula f;
  f.variable_count = n;
  f.weights.emplace();

  BigInt total = 0;
  for (const auto& [pair, w] : g.weights()) total += w;

  // Pin size-1 groups to their only vertex with a clause too heavy to drop.
  for (int i = 0; i < n; ++i) {
    if (base.group(i).size() == 1) {
      f.clauses.push_back({{Literal{i, false}}});
      f.weights->push_back(total + 1);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < static_cast<int>(base.group(i).size()); ++a) {
        for (int b = 0; b < static_cast<int>(base.group(j).size()); ++b) {
          f.clauses.push_back({{Literal{i, a == 0}, Literal{j, b == 0}}});
          f.weights->push_back(g.weight(base.group(i)[a], base.group(j)[b]));
        }
      }
    }
  }
  return f;
}

BigInt gap_weight(int n, int k) {
  if (n < 1 || k < 1) {
    fail(Errc::invalid_argument, "gap_weight requires n >= 1 and k >= 1");
  }
  constexpr std::uint64_t kMaxExponent = 1u << 20;  // 2^(2^20) ~ 128 KiB
  std::uint64_t e = 1;
  for (int t = 0; t < k; ++t) {
    e *= static_cast<std::uint64_t>(n);
    if (e > kMaxExponent) {
      fail(Errc::budget_exceeded,
           "gap exponent n^k exceeds the supported cap of 2^20");
    }
  }
  return BigInt(1) << e;
}

WeightedPartiteGraph clique_gap_weights(const PartiteGraph& g, int k) {
  require_valid(g, "clique_gap_weights");
  const BigInt heavy = gap_weight(g.group_count(), k);

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<std::pair<VertexId, VertexId>, BigInt> weight;
  for (int i = 0; i < g.group_count(); ++i) {
    for (int j = i + 1; j < g.group_count(); ++j) {
      for (VertexId u : g.group(i)) {
        for (VertexId v : g.group(j)) {
          VertexId x = u, y = v;
          if (x > y) std::swap(x, y);
          edges.emplace_back(x, y);
          weight[{x, y}] = g.has_edge(u, v) ? BigInt(0) : heavy;
        }
      }
    }
  }
  PartiteGraph complete(g.groups(), edges, g.declared_m());
  return WeightedPartiteGraph(std::move(complete), std::move(weight));
}

}  // namespace ors
