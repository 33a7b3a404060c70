#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace slopes {

// Simple undirected graph with maximum degree three. Vertices are 0..n-1;
// edges get stable ids by sorting the endpoint pairs lexicographically, so
// the same edge set always yields the same ids no matter the input order.
class Graph {
 public:
  Graph() = default;

  // Validates the edge list: endpoints in range, no loops, no parallel
  // edges, and no vertex of degree four or more.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::pair<int, int>& edge(int id) const { return edges_[id]; }

  // Neighbors and incident edge ids, both ascending.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<int>& incident_edges(int v) const { return inc_[v]; }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  std::optional<int> edge_id(int u, int v) const;
  int other_end(int edge_id, int v) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
};

// Relabeled induced subgraph. Vertex i of the subgraph is original vertex
// to_original[i]; to_sub maps the other way (-1 where absent).
struct Subgraph {
  Graph graph;
  std::vector<int> to_original;
  std::vector<int> to_sub;
};

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace slopes
