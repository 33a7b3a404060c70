#include <doctest.h>

#include "slopes/coords.hpp"
#include "slopes/errors.hpp"
#include "slopes/geometry.hpp"
#include "slopes/placement.hpp"

using namespace slopes;

namespace {

Point irr(int i, long y) { return {ExactCoord::basis(i), ExactCoord::from_int(y)}; }

}  // namespace

TEST_CASE("point equality and arithmetic") {
  CHECK(make_point(1, 2) == make_point(1, 2));
  CHECK(make_point(1, 2) != make_point(2, 1));
  CHECK(make_point(1, 2) + make_point(3, -1) == make_point(4, 1));
  CHECK(make_point(1, 2) - make_point(3, -1) == make_point(-2, 3));
}

TEST_CASE("slope classes of the four directions") {
  Point o = make_point(0, 0);
  CHECK(segment_slope_class(o, make_point(5, 0)) == SlopeClass::East);
  CHECK(segment_slope_class(o, make_point(-5, 0)) == SlopeClass::East);
  CHECK(segment_slope_class(o, make_point(0, 3)) == SlopeClass::North);
  CHECK(segment_slope_class(o, make_point(2, 2)) == SlopeClass::NorthEast);
  CHECK(segment_slope_class(o, make_point(-2, -2)) == SlopeClass::NorthEast);
  CHECK(segment_slope_class(o, make_point(-1, 1)) == SlopeClass::NorthWest);
  CHECK(segment_slope_class(o, make_point(3, 1)) == SlopeClass::Other);
  CHECK_THROWS_AS(segment_slope_class(o, o), InternalError);

  // Irrational endpoints classify symbolically: from sqrt2 to sqrt3 rising
  // by sqrt3 - sqrt2 is the +1 diagonal.
  Point a{ExactCoord::basis(1), ExactCoord()};
  Point b{ExactCoord::basis(2), ExactCoord::basis(2) - ExactCoord::basis(1)};
  CHECK(segment_slope_class(a, b) == SlopeClass::NorthEast);

  CHECK(slope_class_name(SlopeClass::East) == "E");
  CHECK(slope_class_name(SlopeClass::NorthWest) == "NW");
}

TEST_CASE("slope equality and membership") {
  CHECK(Slope::vertical_slope() == Slope::vertical_slope());
  CHECK(Slope::of_tangent(Rational(1, 2)) == Slope::of_tangent(Rational(2, 4)));
  CHECK_FALSE(Slope::of_tangent(1) == Slope::vertical_slope());
  CHECK_FALSE(Slope::of_tangent(1) == Slope::of_tangent(-1));

  Point o = make_point(0, 0);
  CHECK(segment_has_slope(o, make_point(0, 7), Slope::vertical_slope()));
  CHECK_FALSE(segment_has_slope(o, make_point(1, 7), Slope::vertical_slope()));
  CHECK(segment_has_slope(o, make_point(2, 4), Slope::of_tangent(2)));
  CHECK(segment_has_slope(o, make_point(-2, -4), Slope::of_tangent(2)));
  CHECK_FALSE(segment_has_slope(o, make_point(2, 4), Slope::of_tangent(Rational(1, 2))));
  // A zero-length segment has no slope at all.
  CHECK_FALSE(segment_has_slope(o, o, Slope::of_tangent(0)));
  CHECK_FALSE(segment_has_slope(o, o, Slope::vertical_slope()));
}

TEST_CASE("open segment membership") {
  Point a = make_point(0, 0), b = make_point(4, 2);
  CHECK(point_on_open_segment(make_point(2, 1), a, b));
  CHECK_FALSE(point_on_open_segment(a, a, b));
  CHECK_FALSE(point_on_open_segment(b, a, b));
  CHECK_FALSE(point_on_open_segment(make_point(6, 3), a, b));
  CHECK_FALSE(point_on_open_segment(make_point(2, 2), a, b));

  // Irrational case: sqrt2 lies strictly between 1 and sqrt3 on the
  // diagonal through (1,1) and (sqrt3, sqrt3).
  Point lo = make_point(1, 1);
  Point hi{ExactCoord::basis(2), ExactCoord::basis(2)};
  Point mid{ExactCoord::basis(1), ExactCoord::basis(1)};
  CHECK(point_on_open_segment(mid, lo, hi));
  Point off{ExactCoord::basis(1), ExactCoord::basis(1) + ExactCoord::from_rational(Rational(1, 1000000))};
  CHECK_FALSE(point_on_open_segment(off, lo, hi));

  // Vertical segments work too.
  CHECK(point_on_open_segment(make_point(3, 1), make_point(3, 0), make_point(3, 2)));
  CHECK_FALSE(point_on_open_segment(make_point(3, 3), make_point(3, 0), make_point(3, 2)));
}

TEST_CASE("rigid motions") {
  Point p = make_point(3, 1);
  CHECK(translate(p, ExactCoord::from_int(-3), ExactCoord::basis(1)) ==
        Point{ExactCoord(), ExactCoord::from_int(1) + ExactCoord::basis(1)});
  CHECK(scale_about(p, make_point(1, 1), Rational(2)) == make_point(5, 1));
  CHECK(scale_about(p, p, Rational(100)) == p);
  CHECK(rotate_half_turn(p, make_point(0, 0)) == make_point(-3, -1));
  CHECK(rotate_half_turn(p, p) == p);
  CHECK(reflect_across_horizontal(p, ExactCoord()) == make_point(3, -1));
  CHECK(reflect_across_horizontal(p, ExactCoord::from_int(1)) == p);
}

TEST_CASE("eighth turns carry East to the diagonals") {
  Point o = make_point(0, 0);
  // The rotations scale by sqrt2, so lattice points stay lattice points.
  CHECK(rotate_eighth_clockwise(make_point(1, 0), o) == make_point(1, -1));
  CHECK(rotate_eighth_counterclockwise(make_point(1, 0), o) == make_point(1, 1));
  CHECK(rotate_eighth_clockwise(make_point(1, 1), o) == make_point(2, 0));
  CHECK(rotate_eighth_counterclockwise(make_point(1, -1), o) == make_point(2, 0));

  // Slope classes map around the compass accordingly.
  Point a = irr(1, 0), b = irr(2, 3);
  SlopeClass before = segment_slope_class(a, b);
  CHECK(before == SlopeClass::Other);
  Point a2 = rotate_eighth_clockwise(a, o), b2 = rotate_eighth_clockwise(b, o);
  CHECK(segment_slope_class(a2, b2) == SlopeClass::Other);

  Point ne = make_point(4, 4);
  CHECK(segment_slope_class(o, rotate_eighth_clockwise(ne, o)) == SlopeClass::East);
  CHECK(segment_slope_class(o, rotate_eighth_counterclockwise(ne, o)) == SlopeClass::North);
}

TEST_CASE("motions preserve incidence") {
  // A point strictly inside a segment stays strictly inside under every
  // motion the assembly code uses.
  Point a = make_point(0, 0), b = make_point(4, 4), m = make_point(1, 1);
  auto still_inside = [&](auto f) {
    return point_on_open_segment(f(m), f(a), f(b));
  };
  Point c = make_point(7, -2);
  CHECK(still_inside([&](const Point& p) { return rotate_half_turn(p, c); }));
  CHECK(still_inside([&](const Point& p) { return rotate_eighth_clockwise(p, c); }));
  CHECK(still_inside([&](const Point& p) { return rotate_eighth_counterclockwise(p, c); }));
  CHECK(still_inside([&](const Point& p) { return reflect_across_horizontal(p, ExactCoord::from_int(3)); }));
  CHECK(still_inside([&](const Point& p) { return scale_about(p, c, Rational(5, 3)); }));
  CHECK(still_inside([&](const Point& p) {
    return translate(p, ExactCoord::basis(4), ExactCoord::basis(5));
  }));
}

TEST_CASE("bounding folds and integer rounding") {
  std::vector<Point> ps = {make_point(2, -1), irr(1, 5), make_point(-3, 0)};
  CHECK(min_x(ps) == ExactCoord::from_int(-3));
  CHECK(max_x(ps) == ExactCoord::from_int(2));
  CHECK(min_y(ps) == ExactCoord::from_int(-1));
  CHECK(max_y(ps) == ExactCoord::from_int(5));

  CHECK(integer_above(ExactCoord::from_int(3)) == 4);
  CHECK(integer_above(ExactCoord::from_rational(Rational(-1, 2))) == 0);
  CHECK(integer_above(ExactCoord::basis(1)) == 2);
  CHECK(integer_above(-ExactCoord::basis(1)) == -1);
  CHECK(abs_coord(-ExactCoord::basis(2)) == ExactCoord::basis(2));
  CHECK(exact_int(9) == ExactCoord::from_int(9));
}

TEST_CASE("stack offset clears the diagonal rays") {
  std::vector<Point> bottom = {make_point(0, 0), make_point(10, 0)};
  std::vector<Point> top = {make_point(5, -20), make_point(6, -20)};
  ExactCoord lift = stack_offset(bottom, top);
  for (auto& p : top) p.y += lift;
  // Every lifted point must clear every 45-degree ray out of the bottom
  // part, which reduces to a vertical gap above the horizontal extent.
  for (const auto& t : top)
    for (const auto& b : bottom) {
      CHECK(t.y > b.y);
      SlopeClass c = segment_slope_class(b, t);
      CHECK(c != SlopeClass::NorthEast);
      CHECK(c != SlopeClass::NorthWest);
      CHECK(c != SlopeClass::East);
    }
}
