#pragma once

#include <string>

#include "slopes/drawing.hpp"
#include "slopes/graph.hpp"

namespace slopes {

// Parses a graph in either supported text form. Lines containing spaces or
// digits are treated as the edge-list format (first line "n m", then m
// lines "u v" with 0-based endpoints, '#' starting a comment anywhere);
// otherwise the first non-blank line is decoded as graph6. Malformed input
// raises ParseError naming the offending line, and inputs of degree four or
// more raise DegreeViolation.
Graph parse_graph(const std::string& text);

Graph parse_edge_list(const std::string& text);

// Decodes one graph6 line, with or without the ">>graph6<<" header.
Graph parse_graph6(const std::string& line);

// Encodes a graph as one graph6 line (no header, no newline).
std::string to_graph6(const Graph& g);

// Serializes a drawing with exact coordinates: every coordinate is a map
// from basis index to rational coefficient (index 0 is the rational unit,
// index i the square root of the i-th prime), plus a display-only floating
// approximation. The graph is embedded as its edge list, so the file is
// self-contained.
std::string drawing_to_json(const Graph& g, const Drawing& d);

struct ParsedDrawing {
  Graph graph;
  Drawing drawing;
};

// Inverse of drawing_to_json; the exact coordinates survive the round trip
// unchanged.
ParsedDrawing drawing_from_json(const std::string& text);

}  // namespace slopes
