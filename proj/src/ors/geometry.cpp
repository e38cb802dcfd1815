#include "ors/geometry.hpp"

#include <cmath>

#include "ors/error.hpp"

namespace ors {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kParallelTol = 1e-12;
}  // namespace

double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n < kParallelTol) {
    fail(Errc::degenerate, "cannot normalize a near-zero vector");
  }
  return a * (1.0 / n);
}

Vec3 Mat3::apply(const Vec3& v) const {
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
          m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Mat3 Mat3::times(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += m[3 * i + k] * o.m[3 * k + j];
      r.m[3 * i + j] = s;
    }
  }
  return r;
}

Mat3 Mat3::transposed() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r.m[3 * i + j] = m[3 * j + i];
  }
  return r;
}

double Mat3::determinant() const {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) -
         m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

bool is_rotation(const Mat3& r, double tol) {
  const Mat3 gram = r.times(r.transposed());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(gram.m[3 * i + j] - expected) > tol) return false;
    }
  }
  return std::abs(r.determinant() - 1.0) <= tol;
}

Mat3 rotation_about_x(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return Mat3{{1, 0, 0, 0, c, -s, 0, s, c}};
}

Mat3 rotation_about_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return Mat3{{c, 0, s, 0, 1, 0, -s, 0, c}};
}

Mat3 rotation_about_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return Mat3{{c, -s, 0, s, c, 0, 0, 0, 1}};
}

Mat3 rotation_from_quaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (n < kParallelTol) {
    fail(Errc::degenerate, "cannot build a rotation from a zero quaternion");
  }
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  return Mat3{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
               2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
               2 * (x * z - w * y), 2 * (y * z + w * x),
               1 - 2 * (x * x + y * y)}};
}

Line make_line(double a, double b, double c) {
  const double s = std::hypot(a, b);
  if (s < kParallelTol) {
    fail(Errc::invalid_argument, "line requires (a,b) != (0,0)");
  }
  a /= s;
  b /= s;
  c /= s;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line{a, b, c};
}

LineMeet line_intersection(const Line& l1, const Line& l2) {
  const double det = l1.a * l2.b - l2.a * l1.b;
  LineMeet meet;
  if (std::abs(det) < kParallelTol) {
    meet.parallel = true;
    // Canonical forms make coincident lines byte-alike up to rounding.
    meet.coincident = std::abs(l1.a - l2.a) <= kParallelTol &&
                      std::abs(l1.b - l2.b) <= kParallelTol &&
                      std::abs(l1.c - l2.c) <= kParallelTol;
    return meet;
  }
  meet.x = (l1.c * l2.b - l2.c * l1.b) / det;
  meet.y = (l1.a * l2.c - l2.a * l1.c) / det;
  return meet;
}

Line circle_to_line(const Orientation& o) {
  const Vec3 n = o.rotation.row(2);
  if (std::hypot(n.x, n.y) < kParallelTol) {
    fail(Errc::degenerate,
         "equator: circle normal parallel to e_z has no central projection");
  }
  return make_line(n.x, n.y, -n.z);
}

Vec3 line_to_circle(const Line& l) {
  return normalized(Vec3{l.a, l.b, -l.c});
}

double normalize_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  if (d > kTwoPi / 2) d = kTwoPi - d;
  return d;
}

std::pair<double, double> common_line_angles(const Orientation& oi,
                                             const Orientation& oj) {
  const Vec3 ni = oi.rotation.row(2);
  const Vec3 nj = oj.rotation.row(2);
  const Vec3 axis = cross(ni, nj);
  if (norm(axis) <= kParallelTol) {
    fail(Errc::degenerate,
         "parallel projection planes have no unique common line");
  }
  const Vec3 d = normalized(axis);
  const Vec3 vi = oi.rotation.apply(d);
  const Vec3 vj = oj.rotation.apply(d);
  return {normalize_angle(std::atan2(vi.y, vi.x)),
          normalize_angle(std::atan2(vj.y, vj.x))};
}

}  // namespace ors
