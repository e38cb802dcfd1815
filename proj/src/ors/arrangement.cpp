#include "ors/arrangement.hpp"

#include <cmath>
#include <string>

#include "ors/error.hpp"

namespace ors {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

template <typename Instance>
void check_instance_impl(const Instance& inst) {
  if (inst.n < 1) fail(Errc::invalid_argument, "instance needs n >= 1");
  if (inst.l && *inst.l < 1) {
    fail(Errc::invalid_argument, "declared l must be >= 1");
  }
  for (const auto& [pair, points] : inst.allowed) {
    auto [i, j] = pair;
    if (i < 0 || j < 0 || i >= inst.n || j >= inst.n) {
      fail(Errc::invalid_argument,
           "allowed-set index (" + std::to_string(i) + "," +
               std::to_string(j) + ") out of range");
    }
    if (i >= j) {
      fail(Errc::invalid_argument,
           "allowed-set keys must have i < j, got (" + std::to_string(i) +
               "," + std::to_string(j) + ")");
    }
    if (inst.l && points.size() > static_cast<std::size_t>(*inst.l)) {
      fail(Errc::invalid_argument,
           "allowed set (" + std::to_string(i) + "," + std::to_string(j) +
               ") exceeds the declared cap of " + std::to_string(*inst.l));
    }
  }
}

RatLine to_rat_line(const Line& l) {
  return RatLine{rational_from_double(l.a), rational_from_double(l.b),
                 rational_from_double(l.c)};
}

}  // namespace

void check_instance(const LineArrangementInstance& inst) {
  check_instance_impl(inst);
}

void check_instance(const LocalCircleInstance& inst) {
  check_instance_impl(inst);
}

ArrangementReport verify_line_arrangement(const std::vector<RatLine>& lines,
                                          const LineArrangementInstance& inst) {
  check_instance(inst);
  if (static_cast<int>(lines.size()) != inst.n) {
    fail(Errc::invalid_argument, "line count does not match instance n");
  }
  ArrangementReport report;
  for (const auto& [pair, points] : inst.allowed) {
    auto [i, j] = pair;
    const auto meet = rat_intersection(lines[i], lines[j]);
    if (!meet) {  // parallel or coincident: no unique allowed crossing
      report.violations.push_back(pair);
      continue;
    }
    bool hit = false;
    for (const RatPoint& p : points) {
      if (p == *meet) {
        hit = true;
        break;
      }
    }
    if (!hit) report.violations.push_back(pair);
  }
  return report;
}

ArrangementReport verify_line_arrangement(const std::vector<Line>& lines,
                                          const LineArrangementInstance& inst,
                                          double tol) {
  if (tol < 0) fail(Errc::invalid_argument, "tolerance must be >= 0");
  if (tol == 0) {
    std::vector<RatLine> exact;
    exact.reserve(lines.size());
    for (const Line& l : lines) exact.push_back(to_rat_line(l));
    return verify_line_arrangement(exact, inst);
  }
  check_instance(inst);
  if (static_cast<int>(lines.size()) != inst.n) {
    fail(Errc::invalid_argument, "line count does not match instance n");
  }
  ArrangementReport report;
  for (const auto& [pair, points] : inst.allowed) {
    auto [i, j] = pair;
    const LineMeet meet = line_intersection(lines[i], lines[j]);
    if (meet.parallel) {
      report.violations.push_back(pair);
      continue;
    }
    bool hit = false;
    for (const RatPoint& p : points) {
      const double dx = meet.x - to_double(p.x);
      const double dy = meet.y - to_double(p.y);
      if (std::hypot(dx, dy) <= tol) {
        hit = true;
        break;
      }
    }
    if (!hit) report.violations.push_back(pair);
  }
  return report;
}

double arrangement_error(const std::vector<Line>& lines,
                         const LineArrangementInstance& inst, double q) {
  check_instance(inst);
  if (static_cast<int>(lines.size()) != inst.n) {
    fail(Errc::invalid_argument, "line count does not match instance n");
  }
  if (!(q > 0)) fail(Errc::invalid_argument, "q must be positive");
  double total = 0;
  for (const auto& [pair, points] : inst.allowed) {
    auto [i, j] = pair;
    if (points.empty()) {
      fail(Errc::invalid_argument,
           "allowed set (" + std::to_string(pair.first) + "," +
               std::to_string(pair.second) +
               ") is empty; the error objective is undefined");
    }
    const LineMeet meet = line_intersection(lines[i], lines[j]);
    if (meet.parallel) {
      total += kParallelPenalty;
      continue;
    }
    double best = -1;
    for (const RatPoint& p : points) {
      const double dx = meet.x - to_double(p.x);
      const double dy = meet.y - to_double(p.y);
      const double d = std::hypot(dx, dy);
      if (best < 0 || d < best) best = d;
    }
    total += std::pow(best, q);
  }
  return total;
}

ArrangementReport verify_local_circle_arrangement(
    const std::vector<Orientation>& orients, const LocalCircleInstance& inst,
    double tol) {
  check_instance(inst);
  if (static_cast<int>(orients.size()) != inst.n) {
    fail(Errc::invalid_argument, "orientation count does not match instance n");
  }
  if (tol < 0) fail(Errc::invalid_argument, "tolerance must be >= 0");
  ArrangementReport report;
  for (const auto& [pair, pairs] : inst.allowed) {
    auto [i, j] = pair;
    double ai, aj;
    try {
      std::tie(ai, aj) = common_line_angles(orients[i], orients[j]);
    } catch (const Error&) {  // parallel planes: no common line to match
      report.violations.push_back(pair);
      continue;
    }
    const double mi = normalize_angle(ai + kPi);
    const double mj = normalize_angle(aj + kPi);
    bool hit = false;
    for (const auto& [bi, bj] : pairs) {
      const bool direct = circular_distance(ai, bi) <= tol &&
                          circular_distance(aj, bj) <= tol;
      const bool mirror = circular_distance(mi, bi) <= tol &&
                          circular_distance(mj, bj) <= tol;
      if (direct || mirror) {
        hit = true;
        break;
      }
    }
    if (!hit) report.violations.push_back(pair);
  }
  return report;
}

}  // namespace ors
