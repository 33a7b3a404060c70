#include "slopes/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "slopes/errors.hpp"

namespace slopes {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.n_ = n;
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge endpoint out of range: " + std::to_string(u) + "-" +
                       std::to_string(v));
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParseError("parallel edge in input");
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  g.inc_.assign(n, {});
  for (int id = 0; id < static_cast<int>(g.edges_.size()); ++id) {
    auto [u, v] = g.edges_[id];
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.inc_[u].push_back(id);
    g.inc_[v].push_back(id);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(g.adj_[v].begin(), g.adj_[v].end());
    if (g.degree(v) > 3)
      throw DegreeViolation("vertex " + std::to_string(v) + " has degree " +
                            std::to_string(g.degree(v)));
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::optional<int> Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it != edges_.end() && *it == std::make_pair(u, v))
    return static_cast<int>(it - edges_.begin());
  return std::nullopt;
}

int Graph::other_end(int edge_id, int v) const {
  auto [a, b] = edges_[edge_id];
  if (a == v) return b;
  if (b == v) return a;
  throw InternalError("vertex not on edge");
}

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  Subgraph s;
  s.to_original = vertices;
  std::sort(s.to_original.begin(), s.to_original.end());
  s.to_original.erase(std::unique(s.to_original.begin(), s.to_original.end()),
                      s.to_original.end());
  s.to_sub.assign(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(s.to_original.size()); ++i)
    s.to_sub[s.to_original[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges())
    if (s.to_sub[u] >= 0 && s.to_sub[v] >= 0)
      edges.emplace_back(s.to_sub[u], s.to_sub[v]);
  s.graph = Graph::from_edges(static_cast<int>(s.to_original.size()), std::move(edges));
  return s;
}

}  // namespace slopes
