#pragma once

#include <array>
#include <utility>

namespace ors {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 normalized(const Vec3& a);  // fails on (near-)zero vectors

// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  Vec3 row(int i) const { return {m[3 * i], m[3 * i + 1], m[3 * i + 2]}; }
  Vec3 apply(const Vec3& v) const;   // matrix * column vector
  Mat3 times(const Mat3& o) const;
  Mat3 transposed() const;
  double determinant() const;
};

// A rotation taking lab coordinates to projection coordinates. The
// projection plane's lab normal is the third row of `rotation`; the first
// two rows are the in-plane reference axes.
struct Orientation {
  Mat3 rotation;
};

// R * R^T = I and det R = 1, both within `tol`.
bool is_rotation(const Mat3& r, double tol = 1e-12);

Mat3 rotation_about_x(double angle);
Mat3 rotation_about_y(double angle);
Mat3 rotation_about_z(double angle);
Mat3 rotation_from_quaternion(double w, double x, double y, double z);

// The line {(x,y) : a*x + b*y = c}, canonical: a^2 + b^2 = 1 and the first
// nonzero of (a, b) positive.
struct Line {
  double a = 1, b = 0, c = 0;
};

// Canonicalizes arbitrary coefficients; (a,b) = (0,0) is an input error.
Line make_line(double a, double b, double c);

struct LineMeet {
  bool parallel = false;
  bool coincident = false;  // meaningful only when parallel
  double x = 0, y = 0;      // meaningful only when not parallel
};

// Unique solution of the 2x2 system, or parallel when |det| < 1e-12
// (canonical coefficients make the determinant scale-free).
LineMeet line_intersection(const Line& l1, const Line& l2);

// Central projection onto the plane z = 1: the great circle with lab normal
// (nx, ny, nz) maps to the line nx*x + ny*y = -nz. The equator (normal
// parallel to e_z) has no image and is a degenerate-projection error.
Line circle_to_line(const Orientation& o);
Vec3 line_to_circle(const Line& l);  // unit normal of the preimage circle

// Angles of the common line of two projection planes in each plane's own
// frame. The line direction is d = unit(n_i x n_j) with n = third row of R;
// alpha = atan2 of the (y, x) components of R*d, normalized to [0, 2*pi).
// Parallel planes (|n_i x n_j| <= 1e-12) are an error.
std::pair<double, double> common_line_angles(const Orientation& oi,
                                             const Orientation& oj);

// Distance between angles on the circle, in [0, pi].
double circular_distance(double a, double b);

// Wraps into [0, 2*pi).
double normalize_angle(double a);

}  // namespace ors
