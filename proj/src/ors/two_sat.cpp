#include "ors/two_sat.hpp"

#include <algorithm>
#include <vector>

#include "ors/error.hpp"

namespace ors {

namespace {

// Node 2v is the positive literal of variable v, 2v+1 the negative one.
inline int node_of(const Literal& lit) {
  return 2 * lit.var + (lit.positive ? 0 : 1);
}

inline int negation(int node) { return node ^ 1; }

// Iterative Tarjan; component ids are assigned in completion order, so an
// inter-component edge u -> v always has comp[u] > comp[v] (reverse
// topological numbering of the condensation).
class TarjanScc {
 public:
  explicit TarjanScc(const std::vector<std::vector<int>>& adj)
      : adj_(adj),
        index_(adj.size(), -1),
        lowlink_(adj.size(), 0),
        comp_(adj.size(), -1),
        on_stack_(adj.size(), false) {
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      if (index_[v] < 0) run(v);
    }
  }

  const std::vector<int>& components() const { return comp_; }

 private:
  struct Frame {
    int node;
    std::size_t next_edge;
  };

  void run(int root) {
    std::vector<Frame> call_stack{{root, 0}};
    visit(root);
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      if (frame.next_edge < adj_[frame.node].size()) {
        const int w = adj_[frame.node][frame.next_edge++];
        if (index_[w] < 0) {
          visit(w);
          call_stack.push_back({w, 0});
        } else if (on_stack_[w]) {
          lowlink_[frame.node] = std::min(lowlink_[frame.node], index_[w]);
        }
      } else {
        const int v = frame.node;
        if (lowlink_[v] == index_[v]) {
          while (true) {
            const int w = scc_stack_.back();
            scc_stack_.pop_back();
            on_stack_[w] = false;
            comp_[w] = next_comp_;
            if (w == v) break;
          }
          ++next_comp_;
        }
        call_stack.pop_back();
        if (!call_stack.empty()) {
          const int parent = call_stack.back().node;
          lowlink_[parent] = std::min(lowlink_[parent], lowlink_[v]);
        }
      }
    }
  }

  void visit(int v) {
    index_[v] = lowlink_[v] = next_index_++;
    scc_stack_.push_back(v);
    on_stack_[v] = true;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> index_;
  std::vector<int> lowlink_;
  std::vector<int> comp_;
  std::vector<bool> on_stack_;
  std::vector<int> scc_stack_;
  int next_index_ = 0;
  int next_comp_ = 0;
};

}  // namespace

SolveOutcome two_sat_solve(const CnfFormula& f) {
  check_cnf(f);
  if (f.max_clause_size() > 2) {
    fail(Errc::invalid_argument,
         "two_sat_solve requires clauses of width at most 2");
  }

  std::vector<std::vector<int>> adj(2 * static_cast<std::size_t>(
                                            std::max(f.variable_count, 0)));
  for (const auto& c : f.clauses) {
    if (c.literals.empty()) return SolveOutcome::infeasible();
    const int a = node_of(c.literals.front());
    const int b = node_of(c.literals.back());  // == a for unit clauses
    adj[negation(a)].push_back(b);
    adj[negation(b)].push_back(a);
  }

  TarjanScc scc(adj);
  const auto& comp = scc.components();

  SolveOutcome out;
  std::vector<bool> truth(f.variable_count, false);
  for (int v = 0; v < f.variable_count; ++v) {
    if (comp[2 * v] == comp[2 * v + 1]) return SolveOutcome::infeasible();
    // Completion-order ids reverse the topological order, so the literal
    // whose component finished first is implication-closed; make it true.
    truth[v] = comp[2 * v] < comp[2 * v + 1];
  }
  out.feasible = true;
  out.truth = std::move(truth);
  return out;
}

}  // namespace ors
