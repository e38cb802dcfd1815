#include "support/geometry_checks.hpp"

#include <map>
#include <set>

#include "ors/exact_geom.hpp"

namespace testsup {

using ors::BigInt;
using ors::RatLine;
using ors::RatPoint;
using ors::Rational;

bool distinct_first_coordinates(const std::vector<IntPoint>& pts) {
  std::set<long long> seen;
  for (const auto& p : pts) {
    if (!seen.insert(p.first).second) return false;
  }
  return true;
}

bool no_three_collinear(const std::vector<IntPoint>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const BigInt cross =
            (BigInt(pts[b].first) - pts[a].first) *
                (BigInt(pts[c].second) - pts[a].second) -
            (BigInt(pts[b].second) - pts[a].second) *
                (BigInt(pts[c].first) - pts[a].first);
        if (cross == 0) return false;
      }
    }
  }
  return true;
}

bool no_foreign_concurrence(const std::vector<IntPoint>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<RatPoint> chosen;
  chosen.reserve(pts.size());
  for (const auto& p : pts) {
    chosen.push_back(RatPoint{Rational(p.first), Rational(p.second)});
  }

  std::vector<RatLine> lines;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      lines.push_back(ors::rat_line_through(chosen[a], chosen[b]));
    }
  }

  std::set<std::pair<Rational, Rational>> chosen_set;
  for (const auto& p : chosen) chosen_set.insert({p.x, p.y});

  std::map<std::pair<Rational, Rational>, std::set<int>> meets;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (ors::rat_coincident(lines[i], lines[j])) return false;  // rule 2
      const auto hit = ors::rat_intersection(lines[i], lines[j]);
      if (!hit) continue;  // parallel
      auto& bucket = meets[{hit->x, hit->y}];
      bucket.insert(static_cast<int>(i));
      bucket.insert(static_cast<int>(j));
    }
  }
  for (const auto& [point, through] : meets) {
    if (through.size() >= 3 && chosen_set.count(point) == 0) return false;
  }
  return true;
}

ors::BigInt column_scan_bound(int k) {
  auto binom = [](int n, int r) {
    if (r < 0 || n < r) return BigInt(0);
    BigInt result = 1;
    for (int t = 0; t < r; ++t) {
      result *= n - t;
      result /= t + 1;
    }
    return result;
  };
  return binom(k, 2) + BigInt(k - 4) * binom(k, 4);
}

}  // namespace testsup
