#pragma once

#include <map>
#include <string>
#include <vector>

#include "slopes/coords.hpp"
#include "slopes/drawing.hpp"
#include "slopes/graph.hpp"

namespace slopes {

// Column prescriptions: vertex id -> basis index. The drawn x-coordinate of
// the vertex is the square root behind that index, so distinct indices give
// columns that are independent over the rationals, which every construction
// below leans on. Index 0 is the unit and is not a legal prescription.
struct XAssignment {
  std::map<int, int> basis_of;
};

// Fresh indices 1, 2, ... for the vertices of degree at most two, in
// ascending vertex order.
XAssignment default_assignment(const Graph& g);

// Prescriptions as exact values instead of bare indices. Used by callers
// that must align columns across separately drawn pieces (for instance the
// two sides of an edge cut). Values must be irrational and, together with
// the unit, linearly independent over the rationals.
using XValues = std::map<int, ExactCoord>;

struct EmbedResult {
  Drawing drawing;
  // Basis indices invented internally for vertices the caller left free.
  std::vector<int> minted_indices;
};

// Draws one cycle with slopes {horizontal, +1, -1}. `cycle` lists the
// vertices 0..n-1 in cyclic order; xs covers every vertex except
// `exceptional`. Guarantees: prescribed vertices sit on their columns, all
// columns are pairwise distinct, the exceptional vertex has maximal
// y-coordinate with no vertex North, Northeast or Northwest of it, and its
// column is a rational combination of at least two prescribed columns.
Drawing embed_cycle(const std::vector<int>& cycle, const XAssignment& xs, int exceptional);

// Two disjoint cycles joined by one edge. c1 and c2 list the two cycles in
// cyclic order, the joining edge is c1[0] -- c2[0], and together the lists
// cover 0..n-1. xs covers exactly the degree-two vertices, i.e. everything
// except the two joint vertices.
Drawing embed_two_cycles_with_edge(const std::vector<int>& c1, const std::vector<int>& c2,
                                   const XAssignment& xs);

// Main entry. Preconditions: g connected, maximum degree three, not a
// cycle, not two cycles joined by one edge (use the dedicated entry), and
// at least one vertex of degree below three. xs assigns distinct positive
// indices to exactly the vertices of degree at most two. The result uses
// the basic slope set and satisfies, under exact arithmetic:
//   (1) every prescribed vertex lies on its column,
//   (2) the drawing is valid: distinct points, slopes from the basic set,
//       no vertex in the open interior of an edge,
//   (3) no vertex due North of a degree-two vertex,
//   (4) no vertex North or Northwest of a degree-one vertex,
//   (5) every x-coordinate lies in the rational span of the prescribed and
//       minted basis elements and the unit.
EmbedResult embed_subcubic(const Graph& g, const XAssignment& xs);

// Value-level variant of embed_subcubic with identical guarantees, reading
// "column" as the given exact value.
EmbedResult embed_subcubic_values(const Graph& g, const XValues& xs);

// Exact audit of the guarantees above; empty means all hold. `prescribed`
// are the value-level columns and `minted` the indices invented during the
// build. Runs after every internal assembly step and in the test suite.
std::vector<std::string> check_embedding_properties(const Graph& g, const Drawing& d,
                                                    const XValues& prescribed,
                                                    const std::vector<int>& minted);

}  // namespace slopes
