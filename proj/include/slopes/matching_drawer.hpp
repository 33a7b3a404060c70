#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slopes/drawing.hpp"
#include "slopes/graph.hpp"
#include "slopes/solver.hpp"

namespace slopes {

// Vertical-line decomposition of a cubic graph: a perfect matching whose
// edges become vertical lines, plus the disjoint cycles remaining when the
// matching is removed. Every matching edge is met by exactly two cycle
// passes: it is shared by two cycles or visited twice by one.
struct CycleSystem {
  Graph graph;
  std::vector<int> matching;             // matching edge ids, ascending
  std::vector<std::vector<int>> cycles;  // vertex sequences in cyclic order
  std::vector<int> cycle_of;             // vertex -> cycle index
  std::vector<int> matching_edge_of;     // vertex -> its matching edge id
  // Per cycle, the position p marking the edge between cycle vertices p and
  // p+1 (mod length) as distinguished; empty until selection has run.
  std::vector<int> distinguished;
};

// Matching edge ids as the cycle is walked, one per vertex.
std::vector<int> matching_sequence(const CycleSystem& cs, int cycle);

// The two matching edges flanking a cycle's distinguished edge, smaller id
// first. They are always distinct.
std::pair<int, int> distinguished_pair(const CycleSystem& cs, int cycle);

// Splits the non-matching edges into cycles. The matching must be perfect
// and the graph cubic; graphs containing a triangle are refused with
// TriangleFound, so every cycle has length at least four.
CycleSystem decompose_cycles(const Graph& g, const std::vector<int>& matching);

// Chooses one distinguished edge per cycle by the chained walk: start at
// the first cycle edge flanked by a matching edge shared with another
// cycle, repeatedly enter the neighbor cycle through that matching edge's
// other occurrence and distinguish one of the two edges flanking it
// (successor first; the single forbidden choice is the one whose far flank
// returns to the start edge's other flank), stop on reaching any visited
// cycle, then extend the same chain from the start edge's other side, and
// open a new round while unvisited cycles remain. The result is audited
// with check_conditions; a violation raises SelectionFailed.
CycleSystem select_distinguished_edges(const CycleSystem& cs);

// Independent audit of the selection. Builds the graph whose nodes are the
// distinguished matching edges and whose edges are the per-cycle flanking
// pairs, and reports: a pair with both flanks equal, a node of degree above
// two, a loop among the pairs (these three make the chain structure
// impossible to lay out as disjoint line blocks), and more than one cycle
// per chain component whose matching edges all belong to that component.
// Empty means the layout below is well defined.
std::vector<std::string> check_conditions(const CycleSystem& cs);

// Left-to-right order of the vertical lines: each chain component's
// matching edges form a contiguous block in chain order (components sorted
// by smallest member id), followed by the never-distinguished matching
// edges in id order. Consecutive lines inside a block are exactly the
// distinguished pairs; gap_cycle names the owning cycle per gap, -1 for the
// unit gaps everywhere else.
struct LineLayout {
  std::vector<int> order;
  std::vector<int> gap_cycle;
};

LineLayout line_layout(const CycleSystem& cs);

// One linear form per cycle: walking the cycle with its distinguished edge
// removed, each step rises by the distance between the two lines it spans,
// so the total rise is a_{i,0} (unit gaps crossed) plus the per-cycle
// variables of the distinguished gaps crossed. The distinguished edge
// itself spans exactly its own gap x_i, making its slope L_i(x) / x_i.
// Throws UnreachableNode if some variable cannot be positive, which the
// selection conditions rule out.
LinearFormSystem build_linear_forms(const CycleSystem& cs);

// Realizes the drawing for an exact solver solution: vertical lines at
// cumulative positions, cycles drawn bottom-up as strictly rising paths
// with diagonal steps, each cycle's band strictly above the previous one,
// and every distinguished edge closing its cycle with slope exactly the
// common value. The result is re-verified against the slope set {vertical,
// +1, -1, common value}.
Drawing layout(const CycleSystem& cs, const SolverSolution& sol);

// End-to-end pipeline for a connected, bridgeless, triangle-free cubic
// graph: perfect matching, cycle decomposition, selection, exact solve,
// layout.
Drawing draw_cubic_four(const Graph& g);

}  // namespace slopes
