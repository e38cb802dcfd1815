#pragma once

// Exhaustive checkers for the three general-position rules, written against
// the raw point list with independent exact arithmetic. The generator
// maintains these rules incrementally; the tests re-derive them from
// scratch.

#include <utility>
#include <vector>

#include "ors/numbers.hpp"

namespace testsup {

using IntPoint = std::pair<long long, long long>;

// Rule 1: every chosen point has a unique first coordinate.
bool distinct_first_coordinates(const std::vector<IntPoint>& pts);

// Rule 2: no line passes through three chosen points.
bool no_three_collinear(const std::vector<IntPoint>& pts);

// Rule 3: three lines, each through two chosen points, may share a point
// only if that point is chosen. Checks every pairwise intersection of the
// spanned lines and demands multiplicity >= 3 only at chosen points.
bool no_foreign_concurrence(const std::vector<IntPoint>& pts);

// Worst-case candidates rejected in column k per the counting argument:
// C(k,2) + (k-4)*C(k,4), zero while the binomials vanish.
ors::BigInt column_scan_bound(int k);

}  // namespace testsup
