#pragma once

#include <array>
#include <vector>

#include "slopes/geometry.hpp"

namespace slopes {

// A straight-line drawing: one exact point per vertex plus the slope set the
// edges are allowed to use. Basic mode is the fixed set {horizontal, +1
// diagonal, vertical, -1 diagonal}; ratio mode replaces the horizontal by a
// rational tangent c computed from the graph.
struct Drawing {
  enum class Mode { Basic, Four };

  Mode mode = Mode::Basic;
  std::vector<Point> positions;
  std::vector<Slope> slopes;
};

// {0, +1, vertical, -1} as exact slopes.
std::vector<Slope> basic_slope_set();

// {vertical, +1, -1, c}.
std::vector<Slope> four_slope_set(const Rational& c);

}  // namespace slopes
