#pragma once

#include <array>
#include <string>
#include <vector>

#include "slopes/graph.hpp"
#include "slopes/graph_algos.hpp"

namespace slopes {

// Size guarantee for minimal supercycles. A cubic graph on n vertices with
// girth g always contains a supercycle on at most
//   2 * ceil(log2((n + 1) / g)) + g - 1
// vertices: grow breadth-first trees out of a shortest cycle; the trees
// double each level, so an extra adjacency appears within logarithmic depth.
int supercycle_size_bound(int n, int girth);

// Largest possible girth of a cubic graph on n vertices, from the Moore
// counting bound: 3 * (2^(g/2) - 1) <= n.
int max_girth_bound(int n);

// One table row [n, threshold, max_girth, worst_girth]: threshold is
// 2*s - 2 where s maximizes supercycle_size_bound(n, g) over attainable
// girths g (smallest maximizing girth wins), so every cubic graph with more
// than threshold vertices splits across a suitable matching cut. Requires n
// even and at least four, the orders cubic graphs exist for.
std::array<int, 4> supercycle_bound_table(int n);

// Rows for even n from 6 up to max_n inclusive.
std::vector<std::array<int, 4>> bound_table(int max_n);

// Renders rows as bracketed tuples, five per line.
std::string format_bound_table(const std::vector<std::array<int, 4>>& rows);

}  // namespace slopes
