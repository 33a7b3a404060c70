#pragma once

#include <array>
#include <optional>
#include <vector>

#include "slopes/graph.hpp"

namespace slopes {

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

// True when the whole graph is one cycle: connected, nonempty, every degree
// two.
bool is_cycle_graph(const Graph& g);

// Vertices of a connected graph where every degree is two, in cycle order
// starting from the smallest vertex, second element the smaller neighbor.
std::vector<int> cycle_order(const Graph& g);

// Shortest cycle overall, as a vertex sequence (no repeats). Deterministic:
// among shortest cycles the one discovered first in edge-id order wins.
std::optional<std::vector<int>> girth_cycle(const Graph& g);

// Shortest cycle through a given vertex.
std::optional<std::vector<int>> shortest_cycle_through(const Graph& g, int v);

// A supercycle is a connected subgraph with minimum degree two that is not a
// plain cycle, so it has a vertex of degree three. The search takes a girth
// cycle and grows the cheapest extra connection found by multi-source
// breadth-first search, which keeps the size within the logarithmic bound
// checked by the tests.
struct Supercycle {
  std::vector<int> vertices;  // ascending
  std::vector<int> edges;     // edge ids, ascending
};

// Smallest supercycle of a connected cubic graph; such graphs always contain
// one. Throws PreconditionViolation when the graph is disconnected or has a
// vertex of degree other than three.
Supercycle find_supercycle(const Graph& g);

// Same search without the degree precondition, for arbitrary graphs such as
// the sides of a candidate cut. Nullopt when no supercycle exists.
std::optional<Supercycle> find_supercycle_any(const Graph& g);

// Validates the defining properties, not the construction.
bool verify_supercycle(const Graph& g, const Supercycle& sc);

// Edge cut between side_a and side_b whose edges form a matching; suitable
// additionally means both sides induce connected subgraphs that each contain
// a supercycle.
struct MCut {
  std::vector<int> side_a, side_b;  // vertex sets, ascending; a holds vertex 0
  std::vector<int> cut_edges;       // edge ids, ascending
};

bool verify_mcut(const Graph& g, const MCut& cut);

// Finds a suitable matching cut of a connected cubic graph. Starts from a
// smallest supercycle, absorbs into its side any outside vertex with two or
// more neighbors already inside (lowest id first), then keeps the leftover
// component maximizing vertices minus incident cut edges (ties to the one
// holding the lowest vertex id) and absorbs the rest. For eighteen or more
// vertices this always succeeds; smaller graphs fall back to exhaustive
// bipartition search, and NotFound reports that none exists.
MCut find_suitable_mcut(const Graph& g);

// Maximum matching by blossom contraction; returns edge ids. A perfect
// matching exists in every bridgeless cubic graph, which is the case the
// drawing pipeline relies on.
std::vector<int> maximum_matching(const Graph& g);

// Matching covering every vertex; throws NoPerfectMatching when the maximum
// matching falls short.
std::vector<int> perfect_matching(const Graph& g);

std::vector<int> bridge_edges(const Graph& g);

// A two-edge cut {e, f} of a bridgeless connected graph, minimal in the
// sense that neither edge alone disconnects. Returns the lexicographically
// first such pair or nullopt. In a bridgeless graph the two edges are always
// vertex-disjoint.
std::optional<std::pair<int, int>> find_two_edge_cut(const Graph& g);

// Small separators of a connected graph: all bridges, all minimal two-edge
// cuts (neither member a bridge), all cut vertices, and all minimal
// two-vertex cuts (neither member a cut vertex). Pairs are ascending and
// listed lexicographically.
struct CutReport {
  std::vector<int> bridges;
  std::vector<std::pair<int, int>> two_edge_cuts;
  std::vector<int> cut_vertices;
  std::vector<std::pair<int, int>> two_vertex_cuts;
};

CutReport find_bridges_and_small_cuts(const Graph& g);

std::optional<std::array<int, 3>> find_triangle(const Graph& g);

// Result of shrinking a triangle to one vertex. The merged vertex reuses the
// slot of the smallest triangle vertex; the two larger ones disappear and
// everything above them shifts down.
struct TriangleContraction {
  std::array<int, 3> triangle;       // original ids, ascending
  std::array<int, 3> outside;        // outside neighbor of each triangle vertex
  std::array<int, 3> boundary_edges; // original edge ids triangle[i] -- outside[i]
  int merged_vertex;                 // id in the contracted graph
  std::vector<int> to_contracted;    // original id -> contracted id
  std::vector<int> to_original;      // contracted id -> original id (merged -> triangle[0])
  Graph contracted;
};

// Requires every triangle vertex to have degree three and the three outside
// neighbors to be distinct (else NonDisjointBoundary). Throws NoTriangle
// when the vertices do not form a triangle.
TriangleContraction contract_triangle(const Graph& g, const std::array<int, 3>& tri);

// Contracts the first triangle in edge-id discovery order; NoTriangle when
// the graph has none.
TriangleContraction contract_triangle(const Graph& g);

// Rebuilds the original graph from a contraction record; used to validate
// round trips.
Graph expand_contraction(const TriangleContraction& c);

// True when the graph consists of exactly two disjoint cycles joined by a
// single edge; outputs the joining edge endpoints if asked.
bool is_two_cycles_joined_by_edge(const Graph& g, std::pair<int, int>* join = nullptr);

// Graph isomorphism by backtracking, intended for small graphs (the figure
// fixtures). Returns a mapping from a's vertices to b's or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace slopes
