#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ors/exact_geom.hpp"
#include "ors/geometry.hpp"

namespace ors {

// Constraint instance over n lines: for every pair (i,j) present in
// `allowed`, lines i and j must intersect at (within tolerance of) one of
// the listed points. Pairs absent from the map are unconstrained — gadget
// instances leave e.g. vertical/vertical pairs free, and those lines are
// parallel by design. A pair that is present with an empty point list can
// never be satisfied.
//
// Points are exact rationals; float producers convert exactly (every double
// is a rational), so one representation serves both.
struct LineArrangementInstance {
  int n = 0;
  std::optional<int> l;  // declared cap on |P_ij|, if any
  std::map<std::pair<int, int>, std::vector<RatPoint>> allowed;
};

// Same shape for great-circle arrangements in local-angle form: allowed
// common-line angle pairs (alpha_i, alpha_j) in [0, 2*pi)^2.
struct LocalCircleInstance {
  int n = 0;
  std::optional<int> l;
  std::map<std::pair<int, int>, std::vector<std::pair<double, double>>> allowed;
};

// Throws invalid_argument on out-of-range indices, i >= j keys, or a point
// list above the declared cap.
void check_instance(const LineArrangementInstance& inst);
void check_instance(const LocalCircleInstance& inst);

struct ArrangementReport {
  std::vector<std::pair<int, int>> violations;

  bool accepted() const { return violations.empty(); }
};

// Float path: every constrained pair must intersect within `tol` of an
// allowed point; parallel constrained pairs violate. At tol == 0 the check
// switches to exact rational arithmetic on the (exactly converted) float
// coefficients, so integral gadgets verify with no rounding leeway.
ArrangementReport verify_line_arrangement(const std::vector<Line>& lines,
                                          const LineArrangementInstance& inst,
                                          double tol);

// Exact path used by the reductions' realizability arguments.
ArrangementReport verify_line_arrangement(const std::vector<RatLine>& lines,
                                          const LineArrangementInstance& inst);

// Sum over constrained pairs of the q-th power of the distance from the
// actual intersection to the nearest allowed point. A parallel constrained
// pair contributes kParallelPenalty instead of an error so objective-based
// experiments stay total; an empty allowed set is a malformed instance.
inline constexpr double kParallelPenalty = 1e12;
double arrangement_error(const std::vector<Line>& lines,
                         const LineArrangementInstance& inst, double q);

// Accepts iff for every constrained pair the common-line angles of
// (o_i, o_j) match some allowed pair within circular tolerance on both
// coordinates. The mirror pair (alpha_i + pi, alpha_j + pi) also counts: the
// common line's direction sign is a convention, not data. Parallel
// projection planes violate.
ArrangementReport verify_local_circle_arrangement(
    const std::vector<Orientation>& orients, const LocalCircleInstance& inst,
    double tol);

}  // namespace ors
