#pragma once

// Shared graph builders for the test suite. Everything is built from explicit
// edge lists so a failing test names the exact graph it ran on.

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "slopes/graph.hpp"

namespace slopes::testing {

inline Graph from_pairs(int n, std::vector<std::pair<int, int>> edges) {
  return Graph::from_edges(n, std::move(edges));
}

// Outer cycle 0..n-1, spokes i -- n+i, inner edges n+i -- n+((i+k) mod n).
inline Graph generalized_petersen(int n, int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    edges.push_back({i, n + i});
    int a = n + i, b = n + (i + k) % n;
    if (a < b) edges.push_back({a, b});
  }
  return from_pairs(2 * n, std::move(edges));
}

inline Graph petersen() { return generalized_petersen(5, 2); }
inline Graph cube() { return generalized_petersen(4, 1); }
inline Graph prism() { return generalized_petersen(3, 1); }
inline Graph moebius_kantor() { return generalized_petersen(8, 3); }

// Cycle 0..n-1 plus chords at the given offsets.
inline Graph circulant(int n, const std::vector<int>& offsets) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int d : offsets) {
      int j = (i + d) % n;
      if (i < j) edges.push_back({i, j});
    }
  return from_pairs(n, std::move(edges));
}

inline Graph heawood() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 14; ++i) edges.push_back({i, (i + 1) % 14});
  for (auto [u, v] : {std::pair{0, 5}, {2, 7}, {4, 9}, {6, 11}, {8, 13}, {1, 10}, {3, 12}})
    edges.push_back({u, v});
  return from_pairs(14, std::move(edges));
}

inline Graph k4() {
  return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph k33() {
  return from_pairs(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// The Petersen graph with one vertex expanded into a triangle 9-10-11, each
// corner taking one of the removed vertex's edges.
inline Graph tietze() {
  return from_pairs(12, {{0, 1},  {1, 2},  {2, 3},  {0, 5},  {1, 6},  {2, 7},
                         {3, 8},  {4, 6},  {6, 8},  {5, 8},  {5, 7},  {4, 7},
                         {0, 9},  {3, 10}, {4, 11}, {9, 10}, {10, 11}, {9, 11}});
}

// Path 0-1-...-(n-1).
inline Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return from_pairs(n, std::move(edges));
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return from_pairs(n, std::move(edges));
}

// Cubic, one bridge: two copies of K4 with one edge subdivided, bridged at
// the subdivision vertices. Vertices 0..3 and 5..8 are the K4 corners, 4 and
// 9 the subdivision points, 4 -- 9 the bridge.
inline Graph cubic_with_bridge() {
  return from_pairs(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
                         {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9},
                         {4, 9}});
}

// Cubic, bridgeless, with a two-edge cut: two copies of K4 minus an edge,
// joined by the cut edges {3,4} and {0,7}.
inline Graph cubic_with_two_edge_cut() {
  return from_pairs(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                        {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7},
                        {3, 4}, {0, 7}});
}

// Subcubic with no perfect matching: a center vertex attached to one vertex
// of each of three triangles. Deleting the center leaves three odd pieces.
inline Graph three_triangle_star() {
  return from_pairs(10, {{0, 1}, {0, 4}, {0, 7},
                         {1, 2}, {1, 3}, {2, 3},
                         {4, 5}, {4, 6}, {5, 6},
                         {7, 8}, {7, 9}, {8, 9}});
}

// Directory holding the bundled expectation files. The build sets
// SLOPES_FIXTURES to the source tree location; a bare "fixtures" works when
// running from the repository root by hand.
inline std::string fixtures_dir() {
  if (const char* env = std::getenv("SLOPES_FIXTURES")) return env;
  return "fixtures";
}

}  // namespace slopes::testing
