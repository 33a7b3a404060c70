#pragma once

#include <string>
#include <vector>

#include "slopes/coords.hpp"

namespace slopes {

struct Point {
  ExactCoord x, y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

inline Point make_point(long x, long y) {
  return {ExactCoord::from_int(x), ExactCoord::from_int(y)};
}

// The four segment directions a basic drawing may use, plus Other for
// anything else. East is horizontal, North vertical, NorthEast the +1
// diagonal and NorthWest the -1 diagonal.
enum class SlopeClass { East, NorthEast, North, NorthWest, Other };

std::string slope_class_name(SlopeClass c);

// Classifies the direction of segment pq with symbolic zero tests on the
// coordinate differences: East means dy = 0, North dx = 0, NorthEast
// dy = dx and NorthWest dy = -dx. Throws if p and q coincide.
SlopeClass segment_slope_class(const Point& p, const Point& q);

// A line slope for drawings with arbitrary rational tangents: either
// vertical or tan(angle) as an exact rational.
struct Slope {
  bool vertical = false;
  Rational tangent = 0;

  static Slope vertical_slope() { return {true, 0}; }
  static Slope of_tangent(const Rational& t) { return {false, t}; }

  bool operator==(const Slope& o) const {
    if (vertical != o.vertical) return false;
    return vertical || tangent == o.tangent;
  }
};

// True when segment pq has exactly this slope: dx = 0 for vertical, and
// dy = t * dx (with dx nonzero) otherwise. Both tests are symbolic.
bool segment_has_slope(const Point& p, const Point& q, const Slope& s);

// True when r lies strictly inside segment ab. Collinearity is decided by a
// symbolic cross product in an extended basis (products of two coordinates
// never need to be ordered, only tested against zero); strict betweenness
// then reduces to ordinary coordinate comparisons.
bool point_on_open_segment(const Point& r, const Point& a, const Point& b);

// Rigid motions and scalings that keep the basic slope classes closed.
// Rotations by 45 degrees carry a sqrt(2) dilation so everything stays in
// the rational span of the basis.
Point translate(const Point& p, const ExactCoord& dx, const ExactCoord& dy);
Point scale_about(const Point& p, const Point& center, const Rational& factor);
Point rotate_half_turn(const Point& p, const Point& center);
// 45 degrees clockwise and scale by sqrt(2): East goes to the -1 diagonal.
Point rotate_eighth_clockwise(const Point& p, const Point& center);
// 45 degrees counterclockwise and scale by sqrt(2): East goes to the +1 diagonal.
Point rotate_eighth_counterclockwise(const Point& p, const Point& center);
Point reflect_across_horizontal(const Point& p, const ExactCoord& axis_y);

}  // namespace slopes
