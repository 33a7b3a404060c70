#pragma once

#include <vector>

#include "slopes/coords.hpp"
#include "slopes/geometry.hpp"

namespace slopes {

ExactCoord exact_int(long v);
ExactCoord abs_coord(const ExactCoord& v);

// Bounding box folds. The point list must be nonempty.
ExactCoord min_x(const std::vector<Point>& ps);
ExactCoord max_x(const std::vector<Point>& ps);
ExactCoord min_y(const std::vector<Point>& ps);
ExactCoord max_y(const std::vector<Point>& ps);

// Smallest integer strictly above the value. A rounded enclosure gives the
// first guess, exact comparisons settle the boundary.
long integer_above(const ExactCoord& v);

// Integer vertical shift placing `top` strictly above every point of
// `bottom` by more than the merged horizontal extent, so no point of one
// part lies on a 45-degree ray through a point of the other.
ExactCoord stack_offset(const std::vector<Point>& bottom, const std::vector<Point>& top);

}  // namespace slopes
