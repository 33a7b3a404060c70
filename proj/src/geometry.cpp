#include "slopes/geometry.hpp"

#include "slopes/errors.hpp"

namespace slopes {

std::string slope_class_name(SlopeClass c) {
  switch (c) {
    case SlopeClass::East: return "E";
    case SlopeClass::NorthEast: return "NE";
    case SlopeClass::North: return "N";
    case SlopeClass::NorthWest: return "NW";
    case SlopeClass::Other: return "other";
  }
  return "?";
}

SlopeClass segment_slope_class(const Point& p, const Point& q) {
  ExactCoord dx = q.x - p.x;
  ExactCoord dy = q.y - p.y;
  if (dx.is_zero() && dy.is_zero())
    throw InternalError("slope class of a degenerate segment");
  if (dy.is_zero()) return SlopeClass::East;
  if (dx.is_zero()) return SlopeClass::North;
  if ((dy - dx).is_zero()) return SlopeClass::NorthEast;
  if ((dy + dx).is_zero()) return SlopeClass::NorthWest;
  return SlopeClass::Other;
}

bool segment_has_slope(const Point& p, const Point& q, const Slope& s) {
  ExactCoord dx = q.x - p.x;
  ExactCoord dy = q.y - p.y;
  if (s.vertical) return dx.is_zero() && !dy.is_zero();
  if (dx.is_zero()) return false;
  return (dy - dx * s.tangent).is_zero();
}

bool point_on_open_segment(const Point& r, const Point& a, const Point& b) {
  ExactCoord ux = b.x - a.x, uy = b.y - a.y;
  ExactCoord vx = r.x - a.x, vy = r.y - a.y;
  if (!cross_difference_is_zero(ux, vy, uy, vx)) return false;
  // Collinear; strictly between the endpoints along the longer axis of ab.
  if (!ux.is_zero()) {
    int ca = r.x.compare(a.x), cb = r.x.compare(b.x);
    return ca != 0 && cb != 0 && ca != cb;
  }
  if (!uy.is_zero()) {
    int ca = r.y.compare(a.y), cb = r.y.compare(b.y);
    return ca != 0 && cb != 0 && ca != cb;
  }
  return false;  // degenerate segment has an empty interior
}

Point translate(const Point& p, const ExactCoord& dx, const ExactCoord& dy) {
  return {p.x + dx, p.y + dy};
}

Point scale_about(const Point& p, const Point& center, const Rational& factor) {
  return {center.x + (p.x - center.x) * factor, center.y + (p.y - center.y) * factor};
}

Point rotate_half_turn(const Point& p, const Point& center) {
  return {center.x - (p.x - center.x), center.y - (p.y - center.y)};
}

Point rotate_eighth_clockwise(const Point& p, const Point& center) {
  ExactCoord dx = p.x - center.x, dy = p.y - center.y;
  return {center.x + dx + dy, center.y + dy - dx};
}

Point rotate_eighth_counterclockwise(const Point& p, const Point& center) {
  ExactCoord dx = p.x - center.x, dy = p.y - center.y;
  return {center.x + dx - dy, center.y + dx + dy};
}

Point reflect_across_horizontal(const Point& p, const ExactCoord& axis_y) {
  return {p.x, axis_y + (axis_y - p.y)};
}

}  // namespace slopes
