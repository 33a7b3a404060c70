#include "slopes/graph_algos.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "slopes/errors.hpp"

namespace slopes {

namespace {

std::vector<int> bfs_component(const Graph& g, int start, std::vector<char>& seen) {
  std::vector<int> comp;
  std::deque<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    comp.push_back(v);
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

}  // namespace

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) out.push_back(bfs_component(g, v, seen));
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  return static_cast<int>(bfs_component(g, 0, seen).size()) == g.vertex_count();
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::vector<int> cycle_order(const Graph& g) {
  if (!is_cycle_graph(g)) throw InternalError("cycle_order on a non-cycle");
  std::vector<int> order{0, g.neighbors(0)[0]};
  while (true) {
    int cur = order.back(), prev = order[order.size() - 2];
    int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    if (next == 0) break;
    order.push_back(next);
  }
  return order;
}

namespace {

// Shortest path between a and b avoiding one edge; empty if none.
std::vector<int> shortest_path_avoiding(const Graph& g, int a, int b, int skip_edge) {
  std::vector<int> parent(g.vertex_count(), -2);
  std::deque<int> queue{a};
  parent[a] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == b) break;
    for (int id : g.incident_edges(v)) {
      if (id == skip_edge) continue;
      int w = g.other_end(id, v);
      if (parent[w] == -2) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[b] == -2) return {};
  std::vector<int> path;
  for (int v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<std::vector<int>> girth_cycle(const Graph& g) {
  std::optional<std::vector<int>> best;
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [u, v] = g.edge(id);
    auto path = shortest_path_avoiding(g, u, v, id);
    if (path.empty()) continue;
    if (!best || path.size() < best->size()) best = path;
  }
  return best;
}

std::optional<std::vector<int>> shortest_cycle_through(const Graph& g, int v) {
  std::optional<std::vector<int>> best;
  for (int id : g.incident_edges(v)) {
    int u = g.other_end(id, v);
    auto path = shortest_path_avoiding(g, v, u, id);
    if (path.empty()) continue;
    if (!best || path.size() < best->size()) best = path;
  }
  return best;
}

namespace {

// Supercycle search within one component, in original vertex ids.
std::optional<Supercycle> supercycle_in_component(const Graph& g,
                                                  const std::vector<int>& comp) {
  Subgraph sub = induced_subgraph(g, comp);
  const Graph& h = sub.graph;
  auto cyc = girth_cycle(h);
  if (!cyc) return std::nullopt;

  std::vector<char> on_cycle(h.vertex_count(), 0);
  for (int v : *cyc) on_cycle[v] = 1;
  std::set<int> cycle_edges;
  for (size_t i = 0; i < cyc->size(); ++i) {
    auto id = h.edge_id((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]);
    if (!id) throw InternalError("girth cycle is not closed");
    cycle_edges.insert(*id);
  }

  // Multi-source BFS out of the cycle. Every non-forest edge is an extra
  // connection that closes a supercycle together with the two forest paths
  // back to the cycle.
  std::vector<int> parent_edge(h.vertex_count(), -1);
  std::vector<int> parent(h.vertex_count(), -1);
  std::vector<char> visited(h.vertex_count(), 0);
  std::deque<int> queue;
  for (int v : *cyc) {
    visited[v] = 1;
    queue.push_back(v);
  }
  std::vector<std::pair<int, int>> events;  // (edge id, vertex it was scanned from)
  std::set<int> seen_event_edges;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int id : h.incident_edges(v)) {
      if (cycle_edges.count(id)) continue;
      int w = h.other_end(id, v);
      if (!visited[w]) {
        visited[w] = 1;
        parent[w] = v;
        parent_edge[w] = id;
        queue.push_back(w);
      } else if (id != parent_edge[v] && id != parent_edge[w] &&
                 !seen_event_edges.count(id)) {
        seen_event_edges.insert(id);
        events.push_back({id, v});
      }
    }
  }
  if (events.empty()) return std::nullopt;

  std::optional<Supercycle> best;
  for (auto [id, from] : events) {
    std::set<int> edges(cycle_edges);
    edges.insert(id);
    auto [x, y] = h.edge(id);
    for (int t : {x, y})
      for (int v = t; parent[v] != -1; v = parent[v]) edges.insert(parent_edge[v]);
    std::set<int> verts;
    for (int e : edges) {
      verts.insert(h.edge(e).first);
      verts.insert(h.edge(e).second);
    }
    Supercycle cand;
    for (int v : verts) cand.vertices.push_back(sub.to_original[v]);
    for (int e : edges) {
      auto [a, b] = h.edge(e);
      cand.edges.push_back(*g.edge_id(sub.to_original[a], sub.to_original[b]));
    }
    std::sort(cand.edges.begin(), cand.edges.end());
    if (!best || cand.vertices.size() < best->vertices.size() ||
        (cand.vertices.size() == best->vertices.size() && cand.vertices < best->vertices))
      best = cand;
  }
  return best;
}

}  // namespace

std::optional<Supercycle> find_supercycle_any(const Graph& g) {
  std::optional<Supercycle> best;
  for (const auto& comp : components(g)) {
    auto cand = supercycle_in_component(g, comp);
    if (cand && (!best || cand->vertices.size() < best->vertices.size() ||
                 (cand->vertices.size() == best->vertices.size() &&
                  cand->vertices < best->vertices)))
      best = cand;
  }
  if (best && !verify_supercycle(g, *best))
    throw InternalError("constructed supercycle failed validation");
  return best;
}

Supercycle find_supercycle(const Graph& g) {
  if (!is_connected(g) || g.vertex_count() == 0)
    throw PreconditionViolation("supercycle search needs a connected graph");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3)
      throw PreconditionViolation("supercycle search needs a cubic graph, vertex " +
                                  std::to_string(v) + " has degree " +
                                  std::to_string(g.degree(v)));
  auto found = find_supercycle_any(g);
  if (!found) throw InternalError("connected cubic graph yielded no supercycle");
  return *found;
}

bool verify_supercycle(const Graph& g, const Supercycle& sc) {
  if (sc.vertices.empty() || sc.edges.empty()) return false;
  if (!std::is_sorted(sc.vertices.begin(), sc.vertices.end()) ||
      std::adjacent_find(sc.vertices.begin(), sc.vertices.end()) != sc.vertices.end())
    return false;
  std::set<int> verts(sc.vertices.begin(), sc.vertices.end());
  std::map<int, int> deg;
  std::vector<std::pair<int, int>> edges;
  for (int id : sc.edges) {
    if (id < 0 || id >= g.edge_count()) return false;
    auto [u, v] = g.edge(id);
    if (!verts.count(u) || !verts.count(v)) return false;
    ++deg[u];
    ++deg[v];
    edges.push_back({u, v});
  }
  bool has_three = false;
  for (int v : sc.vertices) {
    if (deg[v] < 2) return false;
    if (deg[v] >= 3) has_three = true;
  }
  if (!has_three) return false;
  // Connectivity over the chosen edges only.
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<int> seen{sc.vertices[0]};
  std::deque<int> queue{sc.vertices[0]};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (!seen.count(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
  }
  return seen.size() == verts.size();
}

bool verify_mcut(const Graph& g, const MCut& cut) {
  int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int v : cut.side_a) {
    if (v < 0 || v >= n || side[v] != -1) return false;
    side[v] = 0;
  }
  for (int v : cut.side_b) {
    if (v < 0 || v >= n || side[v] != -1) return false;
    side[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (side[v] == -1) return false;
  if (cut.side_a.empty() || cut.side_b.empty()) return false;
  if (side[0] != 0) return false;
  std::vector<int> expected;
  for (int id = 0; id < g.edge_count(); ++id)
    if (side[g.edge(id).first] != side[g.edge(id).second]) expected.push_back(id);
  if (expected != cut.cut_edges) return false;
  std::set<int> touched;
  for (int id : cut.cut_edges) {
    auto [u, v] = g.edge(id);
    if (touched.count(u) || touched.count(v)) return false;  // not a matching
    touched.insert(u);
    touched.insert(v);
  }
  for (const auto& verts : {cut.side_a, cut.side_b}) {
    Subgraph sub = induced_subgraph(g, verts);
    if (!is_connected(sub.graph)) return false;
    // A connected graph holds a supercycle exactly when it has two
    // independent cycles.
    if (sub.graph.edge_count() < sub.graph.vertex_count() + 1) return false;
  }
  return true;
}

namespace {

MCut build_mcut(const Graph& g, const std::vector<int>& side) {
  MCut cut;
  for (int v = 0; v < g.vertex_count(); ++v)
    (side[v] == side[0] ? cut.side_a : cut.side_b).push_back(v);
  for (int id = 0; id < g.edge_count(); ++id)
    if (side[g.edge(id).first] != side[g.edge(id).second]) cut.cut_edges.push_back(id);
  return cut;
}

std::optional<MCut> exhaustive_mcut(const Graph& g) {
  int n = g.vertex_count();
  std::optional<MCut> best;
  size_t best_cut = 0;
  for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
    // Vertex 0 always on side a; the remaining bits choose side b membership.
    std::vector<int> side(n, 0);
    for (int v = 1; v < n; ++v)
      if (mask & (1ul << (v - 1))) side[v] = 1;
    if (std::count(side.begin(), side.end(), 1) == 0) continue;
    MCut cand = build_mcut(g, side);
    if (!verify_mcut(g, cand)) continue;
    if (!best || cand.cut_edges.size() < best_cut) {
      best = cand;
      best_cut = cand.cut_edges.size();
    }
  }
  return best;
}

}  // namespace

MCut find_suitable_mcut(const Graph& g) {
  int n = g.vertex_count();
  if (!is_connected(g) || n == 0)
    throw PreconditionViolation("matching cut search needs a connected graph");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 3)
      throw PreconditionViolation("matching cut search needs a cubic graph, vertex " +
                                  std::to_string(v) + " has degree " +
                                  std::to_string(g.degree(v)));

  // Seed one side with a smallest supercycle, then absorb any outside vertex
  // holding two or more neighbors inside; afterwards every outside vertex has
  // at most one edge into the seed side, and seed vertices keep at least two
  // neighbors inside, so the final cut is automatically a matching.
  std::vector<char> in_a(n, 0);
  for (int v : find_supercycle(g).vertices) in_a[v] = 1;
  while (true) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (in_a[v]) continue;
      int inside = 0;
      for (int w : g.neighbors(v))
        if (in_a[w]) ++inside;
      if (inside >= 2) pick = v;
    }
    if (pick < 0) break;
    in_a[pick] = 1;
  }

  std::vector<int> outside;
  for (int v = 0; v < n; ++v)
    if (!in_a[v]) outside.push_back(v);
  if (!outside.empty()) {
    // Keep the leftover component with the largest vertex count minus cut
    // edge count; that excess of two or more is exactly what lets the far
    // side hold a supercycle of its own. Everything else joins the seed.
    Subgraph sub = induced_subgraph(g, outside);
    auto comps = components(sub.graph);
    int best = -1;
    long best_score = 0;
    int best_anchor = n;
    for (size_t i = 0; i < comps.size(); ++i) {
      long cut = 0;
      int anchor = n;
      for (int v : comps[i]) {
        int ov = sub.to_original[v];
        anchor = std::min(anchor, ov);
        for (int w : g.neighbors(ov))
          if (in_a[w]) ++cut;
      }
      long score = static_cast<long>(comps[i].size()) - cut;
      if (best < 0 || score > best_score ||
          (score == best_score && anchor < best_anchor)) {
        best = static_cast<int>(i);
        best_score = score;
        best_anchor = anchor;
      }
    }
    for (size_t i = 0; i < comps.size(); ++i) {
      if (static_cast<int>(i) == best) continue;
      for (int v : comps[i]) in_a[sub.to_original[v]] = 1;
    }

    std::vector<int> side(n, 0);
    for (int v = 0; v < n; ++v)
      if (!in_a[v]) side[v] = 1;
    MCut cut = build_mcut(g, side);
    if (verify_mcut(g, cut)) return cut;
  }

  // The counting that backs the procedure kicks in from eighteen vertices on,
  // so a failure there is a bug rather than a bad input.
  if (n >= 18)
    throw InternalError("matching cut procedure failed on " + std::to_string(n) +
                        " vertices");
  if (auto cut = exhaustive_mcut(g)) return *cut;
  throw NotFound("no suitable matching cut on " + std::to_string(n) + " vertices");
}

namespace {

// Classic blossom-contraction matching over adjacency lists.
struct BlossomMatcher {
  const Graph& g;
  int n;
  std::vector<int> match, p, base;
  std::vector<char> used, blossom;

  explicit BlossomMatcher(const Graph& graph)
      : g(graph), n(graph.vertex_count()), match(n, -1), p(n), base(n), used(n), blossom(n) {}

  int lca(int a, int b) {
    std::vector<char> seen(n, 0);
    for (int v = a;; v = p[match[v]]) {
      v = base[v];
      seen[v] = 1;
      if (match[v] == -1) break;
    }
    for (int v = b;; v = p[match[v]]) {
      v = base[v];
      if (seen[v]) return v;
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = 1;
      blossom[base[match[v]]] = 1;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  }

  int find_path(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(p.begin(), p.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
          int cur_base = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (p[to] == -1) {
          p[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  }

  void run() {
    // Greedy seed in edge-id order keeps results deterministic.
    for (int id = 0; id < g.edge_count(); ++id) {
      auto [u, v] = g.edge(id);
      if (match[u] == -1 && match[v] == -1) {
        match[u] = v;
        match[v] = u;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        int pv = p[u], ppv = match[pv];
        match[u] = pv;
        match[pv] = u;
        u = ppv;
      }
    }
  }
};

}  // namespace

std::vector<int> maximum_matching(const Graph& g) {
  BlossomMatcher m(g);
  m.run();
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (m.match[v] > v) out.push_back(*g.edge_id(v, m.match[v]));
  return out;
}

std::vector<int> perfect_matching(const Graph& g) {
  auto m = maximum_matching(g);
  if (static_cast<int>(m.size()) * 2 != g.vertex_count())
    throw NoPerfectMatching("maximum matching covers " + std::to_string(2 * m.size()) +
                            " of " + std::to_string(g.vertex_count()) + " vertices");
  return m;
}

std::vector<int> bridge_edges(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> out;
  int timer = 0;
  // Iterative depth-first search carrying the edge used to enter each vertex.
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<std::tuple<int, int, size_t>> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, in_edge, idx] = stack.back();
      if (idx < g.incident_edges(v).size()) {
        int id = g.incident_edges(v)[idx++];
        if (id == in_edge) continue;
        int w = g.other_end(id, v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        if (in_edge != -1) {
          int parent = g.other_end(in_edge, v);
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) out.push_back(in_edge);
        }
        stack.pop_back();
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<int, int>> find_two_edge_cut(const Graph& g) {
  auto bridges = bridge_edges(g);
  std::set<int> bridge_set(bridges.begin(), bridges.end());
  auto connected_without = [&g](int e, int f) {
    std::vector<std::pair<int, int>> edges;
    for (int id = 0; id < g.edge_count(); ++id)
      if (id != e && id != f) edges.push_back(g.edge(id));
    return is_connected(Graph::from_edges(g.vertex_count(), std::move(edges)));
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    if (bridge_set.count(e)) continue;
    for (int f = e + 1; f < g.edge_count(); ++f) {
      if (bridge_set.count(f)) continue;
      if (!connected_without(e, f)) return std::make_pair(e, f);
    }
  }
  return std::nullopt;
}

CutReport find_bridges_and_small_cuts(const Graph& g) {
  if (!is_connected(g))
    throw PreconditionViolation("cut report needs a connected graph");
  CutReport report;
  report.bridges = bridge_edges(g);
  std::set<int> bridge_set(report.bridges.begin(), report.bridges.end());

  auto connected_without_edges = [&g](int e, int f) {
    std::vector<std::pair<int, int>> edges;
    for (int id = 0; id < g.edge_count(); ++id)
      if (id != e && id != f) edges.push_back(g.edge(id));
    return is_connected(Graph::from_edges(g.vertex_count(), std::move(edges)));
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    if (bridge_set.count(e)) continue;
    for (int f = e + 1; f < g.edge_count(); ++f) {
      if (bridge_set.count(f)) continue;
      if (!connected_without_edges(e, f)) report.two_edge_cuts.push_back({e, f});
    }
  }

  int n = g.vertex_count();
  auto connected_without_vertices = [&g, n](int u, int v) {
    std::vector<int> keep;
    for (int w = 0; w < n; ++w)
      if (w != u && w != v) keep.push_back(w);
    if (keep.size() < 2) return true;
    return is_connected(induced_subgraph(g, keep).graph);
  };
  for (int v = 0; v < n; ++v)
    if (!connected_without_vertices(v, v)) report.cut_vertices.push_back(v);
  std::set<int> cut_vertex_set(report.cut_vertices.begin(), report.cut_vertices.end());
  for (int u = 0; u < n; ++u) {
    if (cut_vertex_set.count(u)) continue;
    for (int v = u + 1; v < n; ++v) {
      if (cut_vertex_set.count(v)) continue;
      if (!connected_without_vertices(u, v)) report.two_vertex_cuts.push_back({u, v});
    }
  }
  return report;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [u, v] = g.edge(id);
    for (int w : g.neighbors(u))
      if (w != v && g.has_edge(w, v)) {
        std::array<int, 3> tri{u, v, w};
        std::sort(tri.begin(), tri.end());
        return tri;
      }
  }
  return std::nullopt;
}

TriangleContraction contract_triangle(const Graph& g, const std::array<int, 3>& tri) {
  auto [a, b, c] = tri;
  if (a == b || b == c || a == c || !g.has_edge(a, b) || !g.has_edge(b, c) ||
      !g.has_edge(a, c))
    throw NoTriangle("vertices do not span a triangle");
  TriangleContraction rec;
  rec.triangle = tri;
  std::sort(rec.triangle.begin(), rec.triangle.end());
  for (int i = 0; i < 3; ++i) {
    int t = rec.triangle[i];
    if (g.degree(t) != 3)
      throw PreconditionViolation("triangle vertex " + std::to_string(t) +
                                  " must have degree three");
    for (int w : g.neighbors(t))
      if (w != rec.triangle[0] && w != rec.triangle[1] && w != rec.triangle[2]) {
        rec.outside[i] = w;
        rec.boundary_edges[i] = *g.edge_id(t, w);
      }
  }
  if (rec.outside[0] == rec.outside[1] || rec.outside[1] == rec.outside[2] ||
      rec.outside[0] == rec.outside[2])
    throw NonDisjointBoundary("triangle boundary edges share an endpoint");

  int n = g.vertex_count();
  rec.to_contracted.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (v == rec.triangle[1] || v == rec.triangle[2]) continue;
    rec.to_contracted[v] = next++;
  }
  rec.to_contracted[rec.triangle[1]] = rec.to_contracted[rec.triangle[0]];
  rec.to_contracted[rec.triangle[2]] = rec.to_contracted[rec.triangle[0]];
  rec.merged_vertex = rec.to_contracted[rec.triangle[0]];
  rec.to_original.assign(n - 2, -1);
  for (int v = 0; v < n; ++v)
    if (v != rec.triangle[1] && v != rec.triangle[2])
      rec.to_original[rec.to_contracted[v]] = v;

  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    int cu = rec.to_contracted[u], cv = rec.to_contracted[v];
    if (cu == cv) continue;  // triangle-internal edge
    edges.emplace_back(cu, cv);
  }
  rec.contracted = Graph::from_edges(n - 2, std::move(edges));
  return rec;
}

TriangleContraction contract_triangle(const Graph& g) {
  auto tri = find_triangle(g);
  if (!tri) throw NoTriangle("graph has no triangle");
  return contract_triangle(g, *tri);
}

Graph expand_contraction(const TriangleContraction& c) {
  int n = static_cast<int>(c.to_contracted.size());
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : c.contracted.edges()) {
    int a = u, b = v;
    if (a == c.merged_vertex) std::swap(a, b);
    if (b == c.merged_vertex) {
      int other = c.to_original[a];
      int tri_end = -1;
      for (int i = 0; i < 3; ++i)
        if (c.outside[i] == other) tri_end = c.triangle[i];
      if (tri_end == -1) throw InternalError("contracted edge has no boundary record");
      edges.emplace_back(tri_end, other);
    } else {
      edges.emplace_back(c.to_original[a], c.to_original[b]);
    }
  }
  edges.emplace_back(c.triangle[0], c.triangle[1]);
  edges.emplace_back(c.triangle[1], c.triangle[2]);
  edges.emplace_back(c.triangle[0], c.triangle[2]);
  return Graph::from_edges(n, std::move(edges));
}

bool is_two_cycles_joined_by_edge(const Graph& g, std::pair<int, int>* join) {
  if (!is_connected(g) || g.vertex_count() < 6) return false;
  std::vector<int> deg3;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 3)
      deg3.push_back(v);
    else if (g.degree(v) != 2)
      return false;
  }
  if (deg3.size() != 2 || !g.has_edge(deg3[0], deg3[1])) return false;
  int join_id = *g.edge_id(deg3[0], deg3[1]);
  std::vector<std::pair<int, int>> edges;
  for (int id = 0; id < g.edge_count(); ++id)
    if (id != join_id) edges.push_back(g.edge(id));
  Graph cut = Graph::from_edges(g.vertex_count(), std::move(edges));
  if (components(cut).size() != 2) return false;
  if (join) *join = {deg3[0], deg3[1]};
  return true;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<char>& used, int next) {
  if (next == a.vertex_count()) return true;
  for (int cand = 0; cand < b.vertex_count(); ++cand) {
    if (used[cand] || b.degree(cand) != a.degree(next)) continue;
    bool ok = true;
    for (int w : a.neighbors(next))
      if (w < next && !b.has_edge(cand, map[w])) ok = false;
    for (int w = 0; w < next && ok; ++w)
      if (!a.has_edge(next, w) && b.has_edge(cand, map[w])) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (extend_isomorphism(a, b, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  std::vector<int> map(a.vertex_count(), -1);
  std::vector<char> used(b.vertex_count(), 0);
  if (extend_isomorphism(a, b, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace slopes
