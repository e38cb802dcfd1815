#include "ors/general_position.hpp"

#include <optional>
#include <set>
#include <tuple>

#include "ors/error.hpp"

namespace ors {

namespace {

// Homogeneous integer coordinates keep every step exact without rational
// normalization: a point is (x, y, w) with w > 0, a line (a, b, c) stands
// for a*x + b*y + c*w = 0. Cross products give joins and meets.

struct HPoint {
  BigInt x, y, w;
};

struct HLine {
  BigInt a, b, c;
};

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  using boost::multiprecision::gcd;
  return gcd(gcd(abs(a), abs(b)), abs(c));
}

void normalize(HPoint& p) {
  const BigInt g = gcd3(p.x, p.y, p.w);
  if (g > 1) {
    p.x /= g;
    p.y /= g;
    p.w /= g;
  }
  if (p.w < 0) {
    p.x = -p.x;
    p.y = -p.y;
    p.w = -p.w;
  }
}

HLine line_through(const HPoint& p, const HPoint& q) {
  return HLine{p.y * q.w - p.w * q.y, p.w * q.x - p.x * q.w,
               p.x * q.y - p.y * q.x};
}

HPoint meet(const HLine& l, const HLine& m) {
  HPoint p{l.b * m.c - l.c * m.b, l.c * m.a - l.a * m.c,
           l.a * m.b - l.b * m.a};
  normalize(p);
  return p;
}

HPoint finite_point(long long x, long long y) { return HPoint{x, y, 1}; }

bool same_point(const HPoint& p, const HPoint& q) {
  // Both normalized with w >= 0.
  return p.x == q.x && p.y == q.y && p.w == q.w;
}

// The y value where line l crosses the column x = g, if it is a
// non-negative integer (the only candidates the scan can reject).
std::optional<BigInt> integral_column_hit(const HLine& l, long long g) {
  if (l.b == 0) return std::nullopt;  // vertical: never crosses a new column
  const BigInt num = -(l.a * g + l.c);
  if (num % l.b != 0) return std::nullopt;
  BigInt h = num / l.b;
  if (h < 0) return std::nullopt;
  return h;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

}  // namespace

GeneralPositionResult generate_general_position_points(int count) {
  if (count < 1) fail(Errc::invalid_argument, "count must be >= 1");

  GeneralPositionResult result;
  std::vector<HPoint> chosen;
  std::vector<HLine> lines;          // through exactly two chosen points each
  std::vector<HPoint> crossings;     // unchosen pairwise line intersections
  std::set<std::tuple<BigInt, BigInt, BigInt>> crossing_keys;

  for (long long g = 0; g < count; ++g) {
    std::set<BigInt> forbidden;

    // Rule 2: columns hit by a line through two chosen points. This also
    // covers landing exactly on an unchosen crossing, since a crossing lies
    // on two such lines.
    for (const HLine& l : lines) {
      if (auto h = integral_column_hit(l, g)) forbidden.insert(*h);
    }
    // Rule 3: a candidate p may not see any chosen q and unchosen crossing X
    // in line, else the new line p-q would join two old lines through X.
    for (const HPoint& x : crossings) {
      for (const HPoint& q : chosen) {
        const HLine l = line_through(q, x);
        if (auto h = integral_column_hit(l, g)) forbidden.insert(*h);
      }
    }

    BigInt h = 0;
    while (forbidden.count(h)) ++h;
    result.scans.push_back(h.convert_to<long long>());
    const int k = static_cast<int>(chosen.size());
    result.scan_bounds.push_back(binomial(k, 2) +
                                 (k >= 4 ? BigInt(k - 4) * binomial(k, 4)
                                         : BigInt(0)));

    const long long hh = h.convert_to<long long>();
    result.points.emplace_back(g, hh);
    const HPoint p = finite_point(g, hh);

    // Extend the incidence structure: new lines p-q, and their crossings
    // with the old lines. New lines meet each other only at p (now chosen),
    // and a crossing equal to a chosen point is never recorded.
    std::vector<HLine> fresh;
    fresh.reserve(chosen.size());
    for (const HPoint& q : chosen) fresh.push_back(line_through(p, q));
    for (const HLine& l : fresh) {
      for (const HLine& m : lines) {
        HPoint x = meet(l, m);
        if (x.w == 0) continue;  // parallel
        bool is_chosen = same_point(x, p);
        for (const HPoint& q : chosen) {
          if (is_chosen) break;
          is_chosen = same_point(x, q);
        }
        if (is_chosen) continue;
        if (crossing_keys.insert({x.x, x.y, x.w}).second) {
          crossings.push_back(std::move(x));
        }
      }
    }
    for (HLine& l : fresh) lines.push_back(std::move(l));
    chosen.push_back(p);
  }
  return result;
}

}  // namespace ors
