#pragma once

#include <string>
#include <vector>

#include "slopes/drawing.hpp"
#include "slopes/graph.hpp"
#include "slopes/graph_algos.hpp"

namespace slopes {

// A hand-laid drawing of one named graph. The drawer matches inputs against
// these by isomorphism, and the tests exercise them directly.
struct FigureFixture {
  std::string name;
  Graph graph;
  Drawing drawing;
};

// The stock drawings: the complete graph on four vertices, K33, a
// ten-vertex pair of five-cycles with a crossed matching, the Heawood graph
// and the Tietze graph. All use the basic slope set and integer coordinates.
const std::vector<FigureFixture>& figure_fixtures();

// Draws a graph of maximum degree three with the basic slope set, or throws
// Fallback when no strategy applies. Dispatch: disconnected graphs are
// drawn per component and stacked vertically; a connected graph with a
// vertex of degree at most two goes to the column-prescribing recursion
// (with dedicated routes for a single cycle and for two cycles joined by an
// edge); a cubic graph is matched against the stock drawings, then split at
// a bridge or a minimal two-edge cut, then reduced by contracting a
// triangle with disjoint boundary, then assembled along a suitable matching
// cut. Every returned drawing has been re-verified; failures inside a
// strategy raise InternalError rather than returning a bad drawing.
Drawing draw_cubic_basic(const Graph& g);

// Draws a cubic graph given one or two edge ids whose removal disconnects
// it into exactly two parts. Each part is drawn by the subcubic recursion
// with the cut endpoints on prescribed columns, the second part is rotated
// by a half turn and lifted above the first, and the cut edges become
// vertical segments. For a two-edge cut the two parts keep the same
// inter-column offset, with opposite orientation, so both cut edges are
// vertical at once; the cut edges must not share a vertex (a shared vertex
// means its third edge is a bridge, which is the split to use instead).
Drawing split_and_join(const Graph& g, const std::vector<int>& cut_edge_ids);

// Draws a cubic graph along a suitable matching cut: side A with fresh
// columns on the cut endpoints, side B with the negated columns, rotated by
// a half turn about the origin so the columns line up, then lifted. The cut
// must be a matching whose sides are connected and each contain a
// supercycle; otherwise PreconditionViolation.
Drawing assemble_mcut_drawing(const Graph& g, const MCut& mc);

// Reverses a triangle contraction inside a finished drawing. The merged
// vertex has three incident edges on three distinct slopes, leaving one
// slope of the set free. One triangle vertex stays put; the other two slide
// outward along their boundary-edge lines to positions where the segment
// between them takes the free slope. The slide distance shrinks
// geometrically until the full drawing verifies. Works for either slope
// mode, since every slope is vertical or a rational tangent.
Drawing expand_triangle(const Drawing& d, const TriangleContraction& rec);

}  // namespace slopes
