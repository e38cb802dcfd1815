#include "ors/exact_geom.hpp"

#include "ors/error.hpp"

namespace ors {

RatLine rat_line_through(const RatPoint& p, const RatPoint& q) {
  if (p == q) {
    fail(Errc::invalid_argument, "line through two equal points is undefined");
  }
  const Rational dx = q.x - p.x;
  const Rational dy = q.y - p.y;
  // Normal (dy, -dx); c fixed by passing through p.
  return RatLine{dy, -dx, dy * p.x - dx * p.y};
}

RatLine rat_vertical(const Rational& x) { return RatLine{1, 0, x}; }

RatLine rat_horizontal(const Rational& y) { return RatLine{0, 1, y}; }

RatLine rat_slope_intercept(const Rational& g, const Rational& h) {
  return RatLine{-g, 1, h};
}

bool rat_parallel(const RatLine& l1, const RatLine& l2) {
  return l1.a * l2.b - l2.a * l1.b == 0;
}

bool rat_coincident(const RatLine& l1, const RatLine& l2) {
  return rat_parallel(l1, l2) && l1.a * l2.c == l2.a * l1.c &&
         l1.b * l2.c == l2.b * l1.c;
}

std::optional<RatPoint> rat_intersection(const RatLine& l1, const RatLine& l2) {
  const Rational det = l1.a * l2.b - l2.a * l1.b;
  if (det == 0) return std::nullopt;
  return RatPoint{(l1.c * l2.b - l2.c * l1.b) / det,
                  (l1.a * l2.c - l2.a * l1.c) / det};
}

bool rat_on_line(const RatLine& l, const RatPoint& p) {
  return l.a * p.x + l.b * p.y == l.c;
}

bool rat_collinear(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x) == 0;
}

}  // namespace ors
