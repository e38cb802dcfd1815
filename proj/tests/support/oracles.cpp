#include "support/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace testsup {

namespace {

bool clause_satisfied(const ors::Clause& c, const std::vector<bool>& truth) {
  for (const auto& lit : c.literals) {
    if (truth[static_cast<std::size_t>(lit.var)] == lit.positive) return true;
  }
  return false;
}

// Runs fn on every assignment of `vars` booleans; stops early if fn returns
// true and reports whether any call did.
template <typename Fn>
bool any_assignment(int vars, Fn&& fn) {
  if (vars < 0 || vars > 24) {
    throw std::invalid_argument("oracle: variable count out of range");
  }
  const std::uint64_t total = 1ull << vars;
  std::vector<bool> truth(static_cast<std::size_t>(vars));
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int v = 0; v < vars; ++v) {
      truth[static_cast<std::size_t>(v)] = (bits >> v) & 1ull;
    }
    if (fn(truth)) return true;
  }
  return false;
}

}  // namespace

bool sat_oracle(const ors::CnfFormula& f) {
  return any_assignment(f.variable_count, [&](const std::vector<bool>& truth) {
    for (const auto& c : f.clauses) {
      if (!clause_satisfied(c, truth)) return false;
    }
    return true;
  });
}

ors::BigInt min_unsat_weight_oracle(const ors::CnfFormula& f) {
  ors::BigInt best = -1;
  any_assignment(f.variable_count, [&](const std::vector<bool>& truth) {
    ors::BigInt cost = 0;
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
      if (!clause_satisfied(f.clauses[c], truth)) {
        cost += f.weights ? (*f.weights)[c] : ors::BigInt(1);
      }
    }
    if (best < 0 || cost < best) best = cost;
    return false;
  });
  return best;
}

bool colorable_oracle(int vertex_count,
                      const std::vector<std::pair<int, int>>& edges, int k) {
  if (vertex_count < 0 || k < 1) {
    throw std::invalid_argument("oracle: bad coloring parameters");
  }
  std::vector<int> color(static_cast<std::size_t>(vertex_count), 0);
  while (true) {
    bool proper = true;
    for (auto [u, v] : edges) {
      if (color[static_cast<std::size_t>(u)] ==
          color[static_cast<std::size_t>(v)]) {
        proper = false;
        break;
      }
    }
    if (proper) return true;
    int pos = 0;
    while (pos < vertex_count &&
           ++color[static_cast<std::size_t>(pos)] == k) {
      color[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == vertex_count) return false;
  }
}

namespace {

// Odometer over one index per group, values in [0, group size + extra).
// Calls fn with the index vector; stops early when fn returns true.
template <typename Fn>
bool product_scan(const ors::PartiteGraph& g, int extra, Fn&& fn) {
  const int n = g.group_count();
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    if (fn(idx)) return true;
    int pos = 0;
    while (pos < n) {
      const int limit = static_cast<int>(g.group(pos).size()) + extra;
      if (++idx[static_cast<std::size_t>(pos)] < limit) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) return false;
  }
}

}  // namespace

bool clique_oracle(const ors::PartiteGraph& g) {
  const int n = g.group_count();
  return product_scan(g, 0, [&](const std::vector<int>& idx) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!g.has_edge(g.group(i)[static_cast<std::size_t>(idx[i])],
                        g.group(j)[static_cast<std::size_t>(idx[j])])) {
          return false;
        }
      }
    }
    return true;
  });
}

ors::BigInt min_weight_oracle(const ors::WeightedPartiteGraph& g) {
  const ors::PartiteGraph& base = g.base();
  const int n = base.group_count();
  ors::BigInt best = -1;
  product_scan(base, 0, [&](const std::vector<int>& idx) {
    ors::BigInt total = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        total += g.weight(base.group(i)[static_cast<std::size_t>(idx[i])],
                          base.group(j)[static_cast<std::size_t>(idx[j])]);
      }
    }
    if (best < 0 || total < best) best = total;
    return false;
  });
  return best;
}

int max_partial_oracle(const ors::PartiteGraph& g) {
  const int n = g.group_count();
  int best = 0;
  // Index == group size means "skip this group".
  product_scan(g, 1, [&](const std::vector<int>& idx) {
    std::vector<ors::VertexId> picked;
    for (int i = 0; i < n; ++i) {
      if (idx[i] < static_cast<int>(g.group(i).size())) {
        picked.push_back(g.group(i)[static_cast<std::size_t>(idx[i])]);
      }
    }
    for (std::size_t a = 0; a < picked.size(); ++a) {
      for (std::size_t b = a + 1; b < picked.size(); ++b) {
        if (!g.has_edge(picked[a], picked[b])) return false;
      }
    }
    best = std::max(best, static_cast<int>(picked.size()));
    return false;
  });
  return best;
}

}  // namespace testsup
