#include "ors/line_gadgets.hpp"

#include <algorithm>
#include <string>

#include "ors/error.hpp"
#include "ors/general_position.hpp"

namespace ors {

PartiteLineReduction partite_to_line_instance(const PartiteGraph& g) {
  ValidationReport report = validate_partite(g);
  if (!report.ok()) {
    fail(Errc::invalid_argument,
         "partite_to_line_instance: invalid graph: " +
             report.violations.front());
  }

  PartiteLineReduction out;
  const auto generated =
      generate_general_position_points(static_cast<int>(g.vertex_count()));
  out.duals = generated.points;

  // General position (no three dual points collinear) makes all pairwise
  // intersections of the primal lines distinct, so an allowed point can only
  // be hit by the vertex pair that produced it.
  std::vector<std::vector<std::size_t>> dual_index(g.group_count());
  std::size_t next = 0;
  out.choices.resize(g.group_count());
  for (int i = 0; i < g.group_count(); ++i) {
    for (std::size_t a = 0; a < g.group(i).size(); ++a) {
      const auto [gg, hh] = out.duals[next];
      dual_index[i].push_back(next++);
      out.choices[i].push_back(
          rat_slope_intercept(Rational(gg), Rational(hh)));
    }
  }

  out.instance.n = g.group_count();
  int largest = 1;
  for (int i = 0; i < g.group_count(); ++i) {
    for (int j = i + 1; j < g.group_count(); ++j) {
      std::vector<RatPoint> points;
      for (std::size_t a = 0; a < g.group(i).size(); ++a) {
        for (std::size_t b = 0; b < g.group(j).size(); ++b) {
          if (!g.has_edge(g.group(i)[a], g.group(j)[b])) continue;
          const auto meet =
              rat_intersection(out.choices[i][a], out.choices[j][b]);
          // Distinct columns give distinct slopes, so the pair always meets.
          points.push_back(*meet);
        }
      }
      largest = std::max(largest, static_cast<int>(points.size()));
      out.instance.allowed[{i, j}] = std::move(points);
    }
  }
  out.instance.l = largest;
  return out;
}

SatLineGadget msat_to_line_instance(const CnfFormula& f) {
  check_cnf(f);
  const int m = f.max_clause_size();
  if (f.variable_count <= m) {
    fail(Errc::invalid_argument,
         "msat_to_line_instance requires more variables than the widest "
         "clause (|U| > m)");
  }
  if (static_cast<int>(f.clauses.size()) <= 2) {
    fail(Errc::invalid_argument,
         "msat_to_line_instance requires more than 2 clauses");
  }

  SatLineGadget out;
  out.variable_count = f.variable_count;
  out.clause_count = static_cast<int>(f.clauses.size());
  out.instance.n = out.variable_count + out.clause_count;

  out.choices.resize(out.instance.n);
  for (int i = 0; i < out.variable_count; ++i) {
    out.choices[i] = {rat_vertical(Rational(2 * i)),
                      rat_vertical(Rational(2 * i + 1))};
  }
  // One horizontal height per (clause, literal), distinct across the board.
  long long height = 0;
  std::vector<std::vector<long long>> clause_heights(out.clause_count);
  for (int j = 0; j < out.clause_count; ++j) {
    for (std::size_t b = 0; b < f.clauses[j].literals.size(); ++b) {
      clause_heights[j].push_back(height);
      out.choices[out.variable_count + j].push_back(
          rat_horizontal(Rational(height)));
      ++height;
    }
  }

  for (int i = 0; i < out.variable_count; ++i) {
    for (int j = 0; j < out.clause_count; ++j) {
      std::vector<RatPoint> points;
      const auto& literals = f.clauses[j].literals;
      for (int a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < literals.size(); ++b) {
          // u_i = a falsifies the literal only if the literal is over u_i
          // and a is its falsifying value.
          const bool falsifies =
              literals[b].var == i && (a == 1) != literals[b].positive;
          if (!falsifies) {
            points.push_back(RatPoint{Rational(2 * i + a),
                                      Rational(clause_heights[j][b])});
          }
        }
      }
      out.instance.allowed[{i, out.variable_count + j}] = std::move(points);
    }
  }
  out.instance.l = 2 * std::max(m, 1);
  return out;
}

std::optional<std::vector<int>> find_realizing_choice(
    const std::vector<std::vector<RatLine>>& choices,
    const LineArrangementInstance& inst) {
  if (static_cast<int>(choices.size()) != inst.n) {
    fail(Errc::invalid_argument, "choice slots do not match instance n");
  }
  for (const auto& slot : choices) {
    if (slot.empty()) return std::nullopt;  // no candidate can fill the slot
  }
  std::vector<int> pick(choices.size(), 0);
  std::vector<RatLine> lines;
  lines.reserve(choices.size());
  while (true) {
    lines.clear();
    for (std::size_t i = 0; i < choices.size(); ++i) {
      lines.push_back(choices[i][pick[i]]);
    }
    if (verify_line_arrangement(lines, inst).accepted()) return pick;
    // Odometer step, last slot fastest.
    int slot = static_cast<int>(choices.size()) - 1;
    while (slot >= 0) {
      if (++pick[slot] < static_cast<int>(choices[slot].size())) break;
      pick[slot] = 0;
      --slot;
    }
    if (slot < 0) return std::nullopt;
  }
}

}  // namespace ors
