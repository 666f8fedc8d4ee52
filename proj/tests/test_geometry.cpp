#include <doctest.h>

#include "test_util.hpp"

using namespace cctest;

namespace {

AxisBox cube(int n, const Rational& r) {
  RVec lo = RVec::Constant(n, -r);
  RVec hi = RVec::Constant(n, r);
  return AxisBox(lo, hi);
}

}  // namespace

TEST_CASE("box_contains: boundary inclusive") {
  CHECK(box_contains(cube(2, 1), vec({"1", "1"})));
  AxisBox u(vec({"0"}), vec({"2/3"}));
  CHECK_FALSE(box_contains(u, vec({"7/10"})));
  CHECK(box_contains(u, vec({"2/3"})));
}

TEST_CASE("pp_contains: scale 1 and 2") {
  Parallelepiped unit{RMat::Identity(2, 2), RVec::Zero(2)};
  CHECK(pp_contains(unit, vec({"1", "1"}), 1));
  CHECK_FALSE(pp_contains(unit, vec({"3/2", "0"}), 1));
  CHECK(pp_contains(unit, vec({"3/2", "0"}), 2));

  Parallelepiped p{mat({{"3", "0"}, {"0", "3"}}), vec({"1/2", "1/2"})};
  CHECK(pp_contains(p, vec({"0", "0"}), 2));
  CHECK_FALSE(pp_contains(p, vec({"0", "0"}), 1));
}

TEST_CASE("pp_from_box: canonical map and center") {
  Parallelepiped a = pp_from_box(AxisBox(vec({"0"}), vec({"2/3"})));
  CHECK(a.map(0, 0) == 3);
  CHECK(a.center(0) == rat("1/3"));

  Parallelepiped b = pp_from_box(cube(3, 1));
  CHECK(b.map == RMat::Identity(3, 3));
  CHECK(b.center == RVec::Zero(3));

  Parallelepiped c = pp_from_box(AxisBox(vec({"1/3", "1/9"}), vec({"1", "1/3"})));
  CHECK(c.map(0, 0) == 3);
  CHECK(c.map(1, 1) == 9);
  CHECK(c.map(0, 1) == 0);
  CHECK(c.center(0) == rat("2/3"));
  CHECK(c.center(1) == rat("2/9"));

  CHECK_THROWS_AS(pp_from_box(AxisBox(vec({"0"}), vec({"0"}))), DegenerateBox);
}

TEST_CASE("pp_scaled_inside_box: examples") {
  AxisBox h = cube(1, 1);
  CHECK(pp_scaled_inside_box(pp_from_box(AxisBox(vec({"0"}), vec({"2/3"}))), h, 2));
  CHECK_FALSE(pp_scaled_inside_box(pp_from_box(AxisBox(vec({"0"}), vec({"1"}))), h, 2));
  Parallelepiped unit{RMat::Identity(2, 2), RVec::Zero(2)};
  CHECK(pp_scaled_inside_box(unit, cube(2, 1), 1));
}

TEST_CASE("ellipsoid_contains: examples") {
  AxisEllipsoid ball{RVec::Zero(2), vec({"1", "1"})};
  CHECK(ellipsoid_contains(ball, vec({"1", "0"})));
  CHECK_FALSE(ellipsoid_contains(ball, vec({"1", "1"})));

  AxisEllipsoid e{vec({"2/3", "2/3"}), vec({"4/9", "4/9"})};
  CHECK(ellipsoid_contains(e, vec({"1/3", "1/3"})));
}

TEST_CASE("ellipsoid_inside_box: examples") {
  AxisEllipsoid e4{RVec::Constant(4, rat("2/3")), RVec::Constant(4, rat("4/9"))};
  CHECK(ellipsoid_inside_box(e4, AxisBox(RVec::Zero(4), RVec::Constant(4, 2))));

  AxisEllipsoid ball{RVec::Zero(3), RVec::Constant(3, 1)};
  CHECK(ellipsoid_inside_box(ball, cube(3, 1)));

  AxisEllipsoid wide{RVec::Zero(2), vec({"4", "1"})};
  CHECK_FALSE(ellipsoid_inside_box(wide, cube(2, 1)));
}

TEST_CASE("property: pp_from_box round-trips box membership") {
  Rng rng(101);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = static_cast<int>(rng.int_in(1, 4));
    RVec lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
      lo(j) = make_rational(rng.int_in(-8, 7), rng.int_in(1, 5));
      hi(j) = lo(j) + make_rational(rng.int_in(1, 8), rng.int_in(1, 5));
    }
    AxisBox b(lo, hi);
    Parallelepiped p = pp_from_box(b);
    AxisBox around(lo - RVec::Constant(n, 1), hi + RVec::Constant(n, 1));
    for (int s = 0; s < 25; ++s) {
      RVec x = rng.point_in_box(around, 40);
      CHECK(pp_contains(p, x, 1) == box_contains(b, x));
    }
  }
}

TEST_CASE("property: scale-2 containment implies scale-1 containment") {
  Rng rng(102);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = static_cast<int>(rng.int_in(1, 3));
    RVec lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
      lo(j) = make_rational(rng.int_in(-6, 2), 4);
      hi(j) = lo(j) + make_rational(rng.int_in(1, 6), 4);
    }
    Parallelepiped p = pp_from_box(AxisBox(lo, hi));
    AxisBox h = cube(n, 2);
    if (pp_scaled_inside_box(p, h, 2)) CHECK(pp_scaled_inside_box(p, h, 1));
  }
}

TEST_CASE("property: ellipsoid_inside_box rejects boundary escapes") {
  // Rational boundary points via the parametrization
  // (cos, sin) = ((1-t^2)/(1+t^2), 2t/(1+t^2)).
  AxisEllipsoid e{vec({"1/2", "0"}), vec({"1", "1/4"})};
  AxisBox outer(vec({"-1", "-1"}), vec({"1", "1"}));
  bool all_inside = true;
  for (int k = -40; k <= 40; ++k) {
    Rational t = make_rational(k, 10);
    Rational den = 1 + t * t;
    Rational c = (1 - t * t) / den;
    Rational s = 2 * t / den;
    RVec x(2);
    x(0) = e.center(0) + c;          // semi-axis 1
    x(1) = e.center(1) + s / 2;      // semi-axis 1/2
    CHECK(ellipsoid_contains(e, x));
    all_inside = all_inside && box_contains(outer, x);
  }
  CHECK(all_inside == ellipsoid_inside_box(e, outer));

  AxisEllipsoid shifted{vec({"3/4", "0"}), vec({"1", "1/4"})};
  CHECK_FALSE(ellipsoid_inside_box(shifted, outer));
  RVec escape(2);
  escape(0) = rat("3/4") + 1;
  escape(1) = 0;
  CHECK(ellipsoid_contains(shifted, escape));
  CHECK_FALSE(box_contains(outer, escape));
}
