#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ors/arrangement.hpp"
#include "ors/error.hpp"
#include "ors/generators.hpp"
#include "ors/geometry.hpp"

using ors::Line;
using ors::LineArrangementInstance;
using ors::LocalCircleInstance;
using ors::Orientation;
using ors::RatPoint;
using ors::Rational;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

LineArrangementInstance diagonal_instance(double px, double py) {
  LineArrangementInstance inst;
  inst.n = 2;
  inst.allowed[{0, 1}] = {RatPoint{ors::rational_from_double(px),
                                   ors::rational_from_double(py)}};
  return inst;
}

std::vector<Line> diagonals() {
  return {ors::make_line(1, -1, 0), ors::make_line(1, 1, 0)};
}

}  // namespace

TEST_CASE("instance validation rejects bad indices and oversized sets") {
  LineArrangementInstance bad;
  bad.n = 2;
  bad.allowed[{1, 0}] = {RatPoint{Rational(0), Rational(0)}};
  CHECK_THROWS_AS(ors::check_instance(bad), ors::Error);

  LineArrangementInstance range;
  range.n = 2;
  range.allowed[{0, 5}] = {RatPoint{Rational(0), Rational(0)}};
  CHECK_THROWS_AS(ors::check_instance(range), ors::Error);

  LineArrangementInstance cap;
  cap.n = 2;
  cap.l = 1;
  cap.allowed[{0, 1}] = {RatPoint{Rational(0), Rational(0)},
                         RatPoint{Rational(1), Rational(1)}};
  CHECK_THROWS_AS(ors::check_instance(cap), ors::Error);
}

TEST_CASE("crossing diagonals hit an allowed origin") {
  const auto report =
      ors::verify_line_arrangement(diagonals(), diagonal_instance(0, 0), 1e-9);
  CHECK(report.accepted());
}

TEST_CASE("a wrong allowed point is reported against its pair") {
  const auto report =
      ors::verify_line_arrangement(diagonals(), diagonal_instance(1, 1), 1e-9);
  REQUIRE_FALSE(report.accepted());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations.front() == std::pair<int, int>{0, 1});
}

TEST_CASE("constrained parallel pairs violate, unconstrained ones do not") {
  std::vector<Line> parallels = {ors::make_line(0, 1, 0),
                                 ors::make_line(0, 1, 1)};
  LineArrangementInstance constrained;
  constrained.n = 2;
  constrained.allowed[{0, 1}] = {RatPoint{Rational(0), Rational(0)}};
  CHECK_FALSE(
      ors::verify_line_arrangement(parallels, constrained, 1e-9).accepted());

  LineArrangementInstance unconstrained;
  unconstrained.n = 2;  // no entry for the pair: nothing to check
  CHECK(ors::verify_line_arrangement(parallels, unconstrained, 1e-9)
            .accepted());
}

TEST_CASE("a present-but-empty allowed set can never be satisfied") {
  LineArrangementInstance inst;
  inst.n = 2;
  inst.allowed[{0, 1}] = {};
  CHECK_FALSE(ors::verify_line_arrangement(diagonals(), inst, 1e-9).accepted());
}

TEST_CASE("tolerance zero verifies exactly on integral coordinates") {
  CHECK(ors::verify_line_arrangement(diagonals(), diagonal_instance(0, 0), 0.0)
            .accepted());
  // Any exact mismatch, however small in float terms, must reject.
  LineArrangementInstance close = diagonal_instance(0, 0);
  close.allowed[{0, 1}] = {
      RatPoint{Rational(1, 1000000000), Rational(0)}};
  CHECK_FALSE(
      ors::verify_line_arrangement(diagonals(), close, 0.0).accepted());
}

TEST_CASE("the exact verifier agrees on rational witnesses") {
  std::vector<ors::RatLine> lines = {
      ors::rat_slope_intercept(Rational(1), Rational(0)),
      ors::rat_slope_intercept(Rational(-1), Rational(0))};
  CHECK(ors::verify_line_arrangement(lines, diagonal_instance(0, 0))
            .accepted());
  CHECK_FALSE(ors::verify_line_arrangement(lines, diagonal_instance(1, 1))
                  .accepted());
}

TEST_CASE("the error of a realized instance is exactly zero") {
  CHECK(ors::arrangement_error(diagonals(), diagonal_instance(0, 0), 2.0) ==
        0.0);
}

TEST_CASE("the squared error of a unit miss is one") {
  CHECK(ors::arrangement_error(diagonals(), diagonal_instance(1, 0), 2.0) ==
        doctest::Approx(1.0));
  CHECK(ors::arrangement_error(diagonals(), diagonal_instance(1, 0), 1.0) ==
        doctest::Approx(1.0));
}

TEST_CASE("error values match an independent recomputation for q = 1 and 2") {
  std::vector<Line> lines = {ors::make_line(1, -1, 0), ors::make_line(1, 1, 0),
                             ors::make_line(1, 0, 2)};  // x = 2 vertical
  LineArrangementInstance inst;
  inst.n = 3;
  inst.allowed[{0, 1}] = {RatPoint{Rational(1), Rational(1)}};
  inst.allowed[{0, 2}] = {RatPoint{Rational(2), Rational(1)},
                          RatPoint{Rational(2), Rational(5)}};
  inst.allowed[{1, 2}] = {RatPoint{Rational(0), Rational(0)}};
  // Actual crossings: (0,0), (2,2), (2,-2); nearest allowed distances:
  // sqrt(2), 1, and sqrt(4+4).
  const double d01 = std::sqrt(2.0), d02 = 1.0, d12 = std::sqrt(8.0);
  for (const double q : {1.0, 2.0}) {
    const double expect =
        std::pow(d01, q) + std::pow(d02, q) + std::pow(d12, q);
    CHECK(ors::arrangement_error(lines, inst, q) == doctest::Approx(expect));
  }
}

TEST_CASE("parallel constrained pairs cost the fixed penalty") {
  std::vector<Line> parallels = {ors::make_line(0, 1, 0),
                                 ors::make_line(0, 1, 1)};
  LineArrangementInstance inst;
  inst.n = 2;
  inst.allowed[{0, 1}] = {RatPoint{Rational(0), Rational(0)}};
  CHECK(ors::arrangement_error(parallels, inst, 2.0) ==
        doctest::Approx(ors::kParallelPenalty));
}

TEST_CASE("an empty allowed set is malformed for the error objective") {
  LineArrangementInstance inst;
  inst.n = 2;
  inst.allowed[{0, 1}] = {};
  CHECK_THROWS_AS(ors::arrangement_error(diagonals(), inst, 2.0), ors::Error);
  CHECK_THROWS_AS(
      ors::arrangement_error(diagonals(), diagonal_instance(0, 0), 0.0),
      ors::Error);
}

TEST_CASE("self-consistent circle instances verify") {
  const auto orients = ors::random_orientations(2, 5);
  const auto [ai, aj] = ors::common_line_angles(orients[0], orients[1]);
  LocalCircleInstance inst;
  inst.n = 2;
  inst.allowed[{0, 1}] = {{ai, aj}};
  CHECK(ors::verify_local_circle_arrangement(orients, inst, 1e-6).accepted());
}

TEST_CASE("a perturbed allowed pair is rejected at tight tolerance") {
  const auto orients = ors::random_orientations(2, 6);
  const auto [ai, aj] = ors::common_line_angles(orients[0], orients[1]);
  LocalCircleInstance inst;
  inst.n = 2;
  inst.allowed[{0, 1}] = {{ors::normalize_angle(ai + 0.1), aj}};
  CHECK_FALSE(
      ors::verify_local_circle_arrangement(orients, inst, 1e-6).accepted());
  CHECK(ors::verify_local_circle_arrangement(orients, inst, 0.11).accepted());
}

TEST_CASE("the mirror representative of a common line also counts") {
  const auto orients = ors::random_orientations(2, 7);
  const auto [ai, aj] = ors::common_line_angles(orients[0], orients[1]);
  LocalCircleInstance inst;
  inst.n = 2;
  inst.allowed[{0, 1}] = {
      {ors::normalize_angle(ai + kPi), ors::normalize_angle(aj + kPi)}};
  CHECK(ors::verify_local_circle_arrangement(orients, inst, 1e-6).accepted());
}

TEST_CASE("mixing a mirrored and an unmirrored coordinate is not a match") {
  const auto orients = ors::random_orientations(2, 8);
  const auto [ai, aj] = ors::common_line_angles(orients[0], orients[1]);
  LocalCircleInstance inst;
  inst.n = 2;
  inst.allowed[{0, 1}] = {{ors::normalize_angle(ai + kPi), aj}};
  CHECK_FALSE(
      ors::verify_local_circle_arrangement(orients, inst, 1e-6).accepted());
}

TEST_CASE("planted instances accept their ground truth") {
  const auto planted = ors::planted_common_line_instance(4, 5, 0.0, 99);
  CHECK(ors::verify_local_circle_arrangement(planted.ground_truth,
                                             planted.instance, 1e-6)
            .accepted());
}

TEST_CASE("duplicate orientations violate as parallel planes") {
  Orientation o;
  o.rotation = ors::rotation_about_z(0.4);
  LocalCircleInstance inst;
  inst.n = 2;
  inst.allowed[{0, 1}] = {{0.0, 0.0}};
  const auto report =
      ors::verify_local_circle_arrangement({o, o}, inst, 1e-6);
  CHECK_FALSE(report.accepted());
}
