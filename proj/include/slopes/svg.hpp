#pragma once

#include <string>

#include "slopes/drawing.hpp"
#include "slopes/graph.hpp"

namespace slopes {

// Renders the floating approximation of a drawing into a 1024 x 1024
// viewbox, one stroke color per slope in the drawing's slope set.
// Presentation only; nothing here feeds back into verification.
std::string drawing_to_svg(const Graph& g, const Drawing& d);

}  // namespace slopes
