#pragma once

#include <utility>
#include <vector>

#include "ors/numbers.hpp"

namespace ors {

// Output of the lexicographic general-position scan. points[k] = (k, h_k);
// scans[k] counts the candidates rejected in column k (equal to h_k, since
// candidates are tried bottom-up); scan_bounds[k] is the worst case
// C(k,2) + (k-4)*C(k,4) admitted by the incidence counting argument.
struct GeneralPositionResult {
  std::vector<std::pair<long long, long long>> points;
  std::vector<long long> scans;
  std::vector<BigInt> scan_bounds;
};

// Integer points, one per column x = 0,1,2,..., choosing in each column the
// least h >= 0 such that after adding (column, h):
//   (1) first coordinates stay unique (automatic, one point per column);
//   (2) no line passes through three chosen points;
//   (3) three lines, each through two chosen points, meet in a common point
//       only if that point is chosen.
// All arithmetic is exact. Lines of the family "y = g*x + h" indexed by these
// points are pairwise non-parallel and in general position.
GeneralPositionResult generate_general_position_points(int count);

}  // namespace ors
