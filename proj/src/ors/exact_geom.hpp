#pragma once

#include <optional>

#include "ors/numbers.hpp"

namespace ors {

// Exact 2D primitives over rationals. Realizability arguments (gadget
// verification at tolerance 0) must not depend on floating point, so
// everything here is exact; the float-facing code in geometry.hpp converts
// at the boundary.

struct RatPoint {
  Rational x;
  Rational y;

  bool operator==(const RatPoint&) const = default;
  auto operator<=>(const RatPoint&) const = default;
};

// The line {(x,y) : a*x + b*y = c} with (a,b) != (0,0).
struct RatLine {
  Rational a;
  Rational b;
  Rational c;
};

RatLine rat_line_through(const RatPoint& p, const RatPoint& q);  // p != q
RatLine rat_vertical(const Rational& x);                         // x = const
RatLine rat_horizontal(const Rational& y);                       // y = const
RatLine rat_slope_intercept(const Rational& g, const Rational& h);  // y = gx+h

bool rat_parallel(const RatLine& l1, const RatLine& l2);
bool rat_coincident(const RatLine& l1, const RatLine& l2);

// Unique crossing point, or nullopt for parallel (including coincident).
std::optional<RatPoint> rat_intersection(const RatLine& l1, const RatLine& l2);

bool rat_on_line(const RatLine& l, const RatPoint& p);
bool rat_collinear(const RatPoint& p, const RatPoint& q, const RatPoint& r);

}  // namespace ors
