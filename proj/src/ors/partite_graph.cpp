#include "ors/partite_graph.hpp"

#include <algorithm>

#include "ors/error.hpp"

namespace ors {

PartiteGraph::PartiteGraph(std::vector<std::vector<VertexId>> groups,
                           const std::vector<std::pair<VertexId, VertexId>>& edges,
                           std::optional<int> declared_m)
    : groups_(std::move(groups)), declared_m_(declared_m) {
  for (int gi = 0; gi < static_cast<int>(groups_.size()); ++gi) {
    for (VertexId v : groups_[gi]) {
      group_index_.emplace(v, gi);  // first group wins on duplicates
    }
  }
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  edge_set_.reserve(edges_.size() * 2);
  for (auto [u, v] : edges_) edge_set_.insert(edge_key(u, v));
}

int PartiteGraph::max_group_size() const {
  std::size_t m = 0;
  for (const auto& g : groups_) m = std::max(m, g.size());
  return static_cast<int>(m);
}

std::size_t PartiteGraph::vertex_count() const {
  std::size_t total = 0;
  for (const auto& g : groups_) total += g.size();
  return total;
}

std::optional<int> PartiteGraph::group_of(VertexId v) const {
  auto it = group_index_.find(v);
  if (it == group_index_.end()) return std::nullopt;
  return it->second;
}

ValidationReport validate_partite(const PartiteGraph& g) {
  ValidationReport report;
  if (g.group_count() < 1) {
    report.violations.push_back("graph must have at least one group");
  }
  std::unordered_map<VertexId, int> seen;
  for (int gi = 0; gi < g.group_count(); ++gi) {
    const auto& members = g.group(gi);
    if (members.empty()) {
      report.violations.push_back("group " + std::to_string(gi) + " is empty");
    }
    if (g.declared_m() && static_cast<int>(members.size()) > *g.declared_m()) {
      report.violations.push_back("group " + std::to_string(gi) + " has " +
                                  std::to_string(members.size()) +
                                  " vertices, above the declared bound " +
                                  std::to_string(*g.declared_m()));
    }
    for (VertexId v : members) {
      auto [it, inserted] = seen.emplace(v, gi);
      if (!inserted) {
        report.violations.push_back(
            "duplicate id " + std::to_string(v) + " in groups " +
            std::to_string(it->second) + " and " + std::to_string(gi));
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    auto gu = g.group_of(u);
    auto gv = g.group_of(v);
    if (!gu || !gv) {
      report.violations.push_back("edge {" + std::to_string(u) + "," +
                                  std::to_string(v) +
                                  "} references an unknown vertex");
      continue;
    }
    if (*gu == *gv) {
      report.violations.push_back("intra-group edge {" + std::to_string(u) +
                                  "," + std::to_string(v) + "} in group " +
                                  std::to_string(*gu));
    }
  }
  return report;
}

bool is_clique(const PartiteGraph& g, const Assignment& a) {
  for (auto [gi, v] : a.picks) {
    if (gi < 0 || gi >= g.group_count()) {
      fail(Errc::invalid_argument,
           "assignment references group " + std::to_string(gi) +
               " outside the graph");
    }
    const auto& members = g.group(gi);
    if (std::find(members.begin(), members.end(), v) == members.end()) {
      fail(Errc::invalid_argument,
           "assignment picks vertex " + std::to_string(v) +
               " which is not in group " + std::to_string(gi));
    }
  }
  if (static_cast<int>(a.picks.size()) != g.group_count()) return false;
  for (auto it = a.picks.begin(); it != a.picks.end(); ++it) {
    for (auto jt = std::next(it); jt != a.picks.end(); ++jt) {
      if (!g.has_edge(it->second, jt->second)) return false;
    }
  }
  return true;
}

WeightedPartiteGraph::WeightedPartiteGraph(
    PartiteGraph base, std::map<std::pair<VertexId, VertexId>, BigInt> weights)
    : base_(std::move(base)) {
  for (auto& [pair, w] : weights) {
    auto [u, v] = pair;
    if (u > v) std::swap(u, v);
    weights_[{u, v}] = std::move(w);
  }
}

bool WeightedPartiteGraph::has_weight(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  return weights_.count({u, v}) != 0;
}

const BigInt& WeightedPartiteGraph::weight(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  auto it = weights_.find({u, v});
  if (it == weights_.end()) {
    fail(Errc::invalid_argument, "no weight for pair {" + std::to_string(u) +
                                     "," + std::to_string(v) + "}");
  }
  return it->second;
}

void WeightedPartiteGraph::require_complete() const {
  const int n = base_.group_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (VertexId u : base_.group(i)) {
        for (VertexId v : base_.group(j)) {
          if (!base_.has_edge(u, v)) {
            fail(Errc::invalid_argument,
                 "weighted graph is not complete: missing edge {" +
                     std::to_string(u) + "," + std::to_string(v) + "}");
          }
          if (!has_weight(u, v)) {
            fail(Errc::invalid_argument,
                 "weighted graph is missing the weight for {" +
                     std::to_string(u) + "," + std::to_string(v) + "}");
          }
        }
      }
    }
  }
  for (const auto& [pair, w] : weights_) {
    if (w < 0) {
      fail(Errc::invalid_argument,
           "negative weight on pair {" + std::to_string(pair.first) + "," +
               std::to_string(pair.second) + "}");
    }
  }
}

BigInt clique_weight(const WeightedPartiteGraph& g, const Assignment& a) {
  if (static_cast<int>(a.picks.size()) != g.base().group_count()) {
    fail(Errc::invalid_argument,
         "clique_weight requires one pick in every group");
  }
  BigInt total = 0;
  for (auto it = a.picks.begin(); it != a.picks.end(); ++it) {
    for (auto jt = std::next(it); jt != a.picks.end(); ++jt) {
      total += g.weight(it->second, jt->second);
    }
  }
  return total;
}

}  // namespace ors
