#pragma once

#include "slopes/drawing.hpp"
#include "slopes/graph.hpp"

namespace slopes {

// Draws any graph of maximum degree three with at most four slopes.
// Connected inputs always succeed: the basic strategies run first, and when
// none applies the graph is cubic and has no small cuts, so either a
// triangle is contracted away and the smaller graph drawn recursively, or
// the triangle-free graph goes through the vertical-line pipeline with its
// computed fourth slope. Disconnected inputs succeed when every component
// yields to a basic strategy; otherwise Fallback propagates, because
// components drawn with different fourth slopes cannot share one slope set.
Drawing draw_any(const Graph& g);

}  // namespace slopes
