#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ors/numbers.hpp"

namespace ors {

using VertexId = int;

// Normalized key for an unordered vertex pair; the smaller id goes in the
// high half so keys sort like (min, max).
inline std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
}

// Partial per-group choice of vertices: group index -> vertex id.
struct Assignment {
  std::map<int, VertexId> picks;

  bool operator==(const Assignment&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// n disjoint vertex groups with edges only between distinct groups. Immutable
// after construction; edges are normalized to (min id, max id), sorted, and
// deduplicated. Construction never rejects bad data — validate_partite turns
// invariant breaks into a report so callers can surface them as data.
class PartiteGraph {
 public:
  PartiteGraph() = default;
  PartiteGraph(std::vector<std::vector<VertexId>> groups,
               const std::vector<std::pair<VertexId, VertexId>>& edges,
               std::optional<int> declared_m = std::nullopt);

  int group_count() const { return static_cast<int>(groups_.size()); }
  const std::vector<std::vector<VertexId>>& groups() const { return groups_; }
  const std::vector<VertexId>& group(int i) const { return groups_.at(i); }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }

  // Largest declared or observed group size.
  int max_group_size() const;
  std::optional<int> declared_m() const { return declared_m_; }

  std::size_t vertex_count() const;
  bool has_edge(VertexId u, VertexId v) const {
    return edge_set_.count(edge_key(u, v)) != 0;
  }

  // Group index of a vertex id; first group wins if ids are duplicated
  // (validate_partite reports duplicates separately).
  std::optional<int> group_of(VertexId v) const;

 private:
  std::vector<std::vector<VertexId>> groups_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::unordered_set<std::uint64_t> edge_set_;
  std::unordered_map<VertexId, int> group_index_;
  std::optional<int> declared_m_;
};

ValidationReport validate_partite(const PartiteGraph& g);

// True iff `a` picks exactly one vertex per group and all picked pairs are
// edges. A pick outside its group or an unknown group index is an input
// error, not "false".
bool is_clique(const PartiteGraph& g, const Assignment& a);

// Complete inter-group graph with one arbitrary-precision weight per pair.
// Weights are keyed by normalized (min id, max id).
class WeightedPartiteGraph {
 public:
  WeightedPartiteGraph() = default;
  WeightedPartiteGraph(PartiteGraph base,
                       std::map<std::pair<VertexId, VertexId>, BigInt> weights);

  const PartiteGraph& base() const { return base_; }
  const std::map<std::pair<VertexId, VertexId>, BigInt>& weights() const {
    return weights_;
  }

  bool has_weight(VertexId u, VertexId v) const;
  const BigInt& weight(VertexId u, VertexId v) const;

  // Throws invalid_argument unless every inter-group pair has exactly one
  // non-negative weight. Solvers call this before trusting the map.
  void require_complete() const;

 private:
  PartiteGraph base_;
  std::map<std::pair<VertexId, VertexId>, BigInt> weights_;
};

// Sum of weights over all n(n-1)/2 picked pairs; requires a complete pick.
BigInt clique_weight(const WeightedPartiteGraph& g, const Assignment& a);

}  // namespace ors
