#include "slopes/cubic_drawer.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slopes/embed.hpp"
#include "slopes/errors.hpp"
#include "slopes/placement.hpp"
#include "slopes/verifier.hpp"

namespace slopes {
namespace {

using Pts = std::vector<Point>;

void verify_or_throw(const Graph& g, const Drawing& d, const std::string& stage) {
  VerificationReport rep = verify_drawing(g, d);
  if (!rep.ok()) throw InternalError(stage + ": " + rep.issues.front());
}

FigureFixture make_fixture(const char* name, int n, std::vector<std::pair<int, int>> edges,
                           std::vector<std::pair<long, long>> pos) {
  FigureFixture f;
  f.name = name;
  f.graph = Graph::from_edges(n, std::move(edges));
  f.drawing.mode = Drawing::Mode::Basic;
  f.drawing.slopes = basic_slope_set();
  f.drawing.positions.reserve(pos.size());
  for (auto [x, y] : pos) f.drawing.positions.push_back(make_point(x, y));
  verify_or_throw(f.graph, f.drawing, "fixture " + f.name);
  return f;
}

std::vector<FigureFixture> build_fixtures() {
  std::vector<FigureFixture> fs;
  fs.push_back(make_fixture("k4", 4,
                            {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                            {{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  fs.push_back(make_fixture("k33", 6,
                            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                             {0, 3}, {1, 4}, {2, 5}},
                            {{1, 0}, {3, 0}, {4, 1}, {3, 2}, {1, 2}, {0, 1}}));
  fs.push_back(make_fixture("crossed-pentagons", 10,
                            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                             {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5},
                             {0, 6}, {1, 5}, {2, 7}, {3, 9}, {4, 8}},
                            {{1, 0}, {0, 1}, {2, 1}, {4, 1}, {3, 0},
                             {0, 2}, {1, 3}, {2, 3}, {3, 3}, {4, 2}}));
  fs.push_back(make_fixture("heawood", 14,
                            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                             {2, 7}, {7, 6}, {6, 5},
                             {8, 9}, {9, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 8},
                             {0, 8}, {1, 11}, {3, 9}, {4, 12}, {6, 10}, {7, 13}},
                            {{0, 2}, {1, 1}, {2, 0}, {3, 0}, {4, 0}, {6, 2}, {6, 3},
                             {5, 3}, {0, 4}, {3, 4}, {6, 4}, {1, 9}, {4, 9}, {5, 9}}));
  fs.push_back(make_fixture("tietze", 12,
                            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                             {0, 8}, {8, 7}, {7, 6}, {6, 5},
                             {9, 10}, {10, 11}, {11, 9},
                             {8, 3}, {6, 2}, {1, 9}, {7, 11}, {4, 10}},
                            {{0, 1}, {0, 2}, {1, 2}, {3, 2}, {4, 2}, {4, 1},
                             {3, 0}, {2, 0}, {1, 0}, {0, 3}, {4, 3}, {2, 5}}));
  return fs;
}

std::vector<int> rotate_to(std::vector<int> cyc, int v) {
  auto it = std::find(cyc.begin(), cyc.end(), v);
  if (it == cyc.end()) throw InternalError("vertex missing from its own cycle");
  std::rotate(cyc.begin(), it, cyc.end());
  return cyc;
}

// All triangles, each as an ascending vertex triple, in edge-id discovery
// order.
std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  std::set<std::array<int, 3>> seen;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    for (int w : g.neighbors(u)) {
      if (w == v || !g.has_edge(w, v)) continue;
      std::array<int, 3> t{u, v, w};
      std::sort(t.begin(), t.end());
      if (seen.insert(t).second) out.push_back(t);
    }
  }
  return out;
}

// Splits a graph known to be two cycles joined by one edge into its cycles,
// rotates each to start at its joint, and hands the assignment to the
// dedicated entry point. The assignment must cover exactly the non-joints.
Drawing draw_joined_cycles(const Graph& g, const XAssignment& xs) {
  std::pair<int, int> join;
  if (!is_two_cycles_joined_by_edge(g, &join))
    throw InternalError("graph is not two cycles joined by an edge");
  auto jid = g.edge_id(join.first, join.second);
  if (!jid) throw InternalError("joining edge not present");
  std::vector<std::pair<int, int>> rest;
  for (int e = 0; e < g.edge_count(); ++e)
    if (e != *jid) rest.push_back(g.edge(e));
  Graph open = Graph::from_edges(g.vertex_count(), std::move(rest));
  auto comps = components(open);
  if (comps.size() != 2) throw InternalError("joined cycles did not split in two");
  std::array<std::vector<int>, 2> cyc;
  for (int side = 0; side < 2; ++side) {
    Subgraph s = induced_subgraph(open, comps[side]);
    for (int local : cycle_order(s.graph)) cyc[side].push_back(s.to_original[local]);
  }
  auto on_first = [&](int v) {
    return std::find(cyc[0].begin(), cyc[0].end(), v) != cyc[0].end();
  };
  int u = join.first, w = join.second;
  if (!on_first(u)) std::swap(u, w);
  return embed_two_cycles_with_edge(rotate_to(cyc[0], u), rotate_to(cyc[1], w), xs);
}

// Connected input with a vertex of degree at most two: route to the
// matching entry of the column-prescribing recursion.
Drawing draw_subcubic_connected(const Graph& g) {
  if (is_cycle_graph(g)) {
    std::vector<int> order = cycle_order(g);
    XAssignment xs;
    int next = 1;
    for (size_t i = 1; i < order.size(); ++i) xs.basis_of[order[i]] = next++;
    return embed_cycle(order, xs, order[0]);
  }
  std::pair<int, int> join;
  if (is_two_cycles_joined_by_edge(g, &join)) {
    XAssignment xs;
    int next = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (v != join.first && v != join.second) xs.basis_of[v] = next++;
    return draw_joined_cycles(g, xs);
  }
  return embed_subcubic(g, default_assignment(g)).drawing;
}

}  // namespace

const std::vector<FigureFixture>& figure_fixtures() {
  static const std::vector<FigureFixture> fs = build_fixtures();
  return fs;
}

Drawing split_and_join(const Graph& g, const std::vector<int>& cut_edge_ids) {
  int n = g.vertex_count();
  if (cut_edge_ids.empty() || cut_edge_ids.size() > 2)
    throw PreconditionViolation("cut must hold one or two edge ids");
  for (int id : cut_edge_ids)
    if (id < 0 || id >= g.edge_count())
      throw PreconditionViolation("cut edge id out of range");

  std::vector<std::pair<int, int>> rest;
  for (int e = 0; e < g.edge_count(); ++e)
    if (std::find(cut_edge_ids.begin(), cut_edge_ids.end(), e) == cut_edge_ids.end())
      rest.push_back(g.edge(e));
  Graph open = Graph::from_edges(n, std::move(rest));
  auto comps = components(open);
  if (comps.size() != 2)
    throw PreconditionViolation("cut does not split the graph in exactly two parts");

  std::vector<char> in_a(n, 0);
  for (int v : comps[0]) in_a[v] = 1;
  if (!in_a[g.edge(cut_edge_ids[0]).first]) {
    std::swap(comps[0], comps[1]);
    for (int v = 0; v < n; ++v) in_a[v] = !in_a[v];
  }

  // endpoints of each cut edge, sorted into the two sides
  std::vector<int> a_end, b_end;
  for (int id : cut_edge_ids) {
    auto [u, v] = g.edge(id);
    if (in_a[u] == in_a[v])
      throw PreconditionViolation("cut edge does not span the two parts");
    a_end.push_back(in_a[u] ? u : v);
    b_end.push_back(in_a[u] ? v : u);
  }
  if (a_end.size() == 2 && (a_end[0] == a_end[1] || b_end[0] == b_end[1]))
    throw PreconditionViolation(
        "cut edges share a vertex; its third edge is a bridge, split there");

  Subgraph sa = induced_subgraph(open, comps[0]);
  Subgraph sb = induced_subgraph(open, comps[1]);

  ExactCoord xi1 = ExactCoord::basis(1);
  XValues xa, xb;
  xa.emplace(sa.to_sub[a_end[0]], xi1);
  if (a_end.size() == 1) {
    xb.emplace(sb.to_sub[b_end[0]], xi1);
  } else {
    ExactCoord xi2 = ExactCoord::basis(2);
    ExactCoord eta = ExactCoord::basis(3);
    xa.emplace(sa.to_sub[a_end[1]], xi2);
    xb.emplace(sb.to_sub[b_end[0]], eta);
    xb.emplace(sb.to_sub[b_end[1]], eta + xi1 - xi2);
  }
  EmbedResult ra = embed_subcubic_values(sa.graph, xa);
  EmbedResult rb = embed_subcubic_values(sb.graph, xb);

  // Half turn of side B. For a bridge the center is the cut endpoint
  // itself; for a two-edge cut it is chosen so the endpoint columns land on
  // xi1 and xi2, keeping both cut edges vertical.
  Pts pb = rb.drawing.positions;
  Point b0 = pb[sb.to_sub[b_end[0]]];
  Point center = b0;
  if (a_end.size() == 2)
    center = Point{(ExactCoord::basis(3) + xi1) * Rational(1, 2), b0.y};
  for (auto& p : pb) p = rotate_half_turn(p, center);

  ExactCoord lift = stack_offset(ra.drawing.positions, pb);
  for (auto& p : pb) p.y += lift;

  Drawing out;
  out.mode = Drawing::Mode::Basic;
  out.slopes = basic_slope_set();
  out.positions.assign(n, Point{});
  for (size_t i = 0; i < ra.drawing.positions.size(); ++i)
    out.positions[sa.to_original[i]] = ra.drawing.positions[i];
  for (size_t i = 0; i < pb.size(); ++i) out.positions[sb.to_original[i]] = pb[i];
  verify_or_throw(g, out, "cut assembly");
  return out;
}

Drawing assemble_mcut_drawing(const Graph& g, const MCut& mc) {
  if (!verify_mcut(g, mc)) throw PreconditionViolation("not a matching cut");
  if (mc.cut_edges.empty()) throw PreconditionViolation("empty cut");
  Subgraph sa = induced_subgraph(g, mc.side_a);
  Subgraph sb = induced_subgraph(g, mc.side_b);
  if (!is_connected(sa.graph) || !is_connected(sb.graph))
    throw PreconditionViolation("cut sides must be connected");
  if (!find_supercycle_any(sa.graph) || !find_supercycle_any(sb.graph))
    throw PreconditionViolation("cut side lacks a supercycle");

  std::vector<char> in_a(g.vertex_count(), 0);
  for (int v : mc.side_a) in_a[v] = 1;

  // Cut endpoints per side, in cut-edge order, as side-local ids.
  std::vector<int> ea, eb;
  for (int id : mc.cut_edges) {
    auto [u, v] = g.edge(id);
    ea.push_back(sa.to_sub[in_a[u] ? u : v]);
    eb.push_back(sb.to_sub[in_a[u] ? v : u]);
  }

  // Each side lands cut endpoint k on column xi_k, with side B upside down
  // so the cut edges stay vertical once it is lifted on top. The general
  // recursion gets the negated columns and a half turn. A side made of two
  // cycles joined by an edge has its own entry point, which only accepts
  // plain basis columns; that side is drawn upright and reflected across
  // the x-axis instead, a flip that also keeps the basic slope set.
  auto side_points = [](const Graph& side, const std::vector<int>& ends, bool flip) {
    if (is_two_cycles_joined_by_edge(side)) {
      XAssignment xs;
      for (size_t k = 0; k < ends.size(); ++k)
        xs.basis_of[ends[k]] = static_cast<int>(k) + 1;
      Pts pts = draw_joined_cycles(side, xs).positions;
      if (flip)
        for (auto& p : pts) p = reflect_across_horizontal(p, ExactCoord{});
      return pts;
    }
    XValues vals;
    for (size_t k = 0; k < ends.size(); ++k) {
      ExactCoord col = ExactCoord::basis(static_cast<int>(k) + 1);
      vals.emplace(ends[k], flip ? -col : col);
    }
    Pts pts = embed_subcubic_values(side, vals).drawing.positions;
    if (flip)
      for (auto& p : pts) p = rotate_half_turn(p, Point{});
    return pts;
  };

  Pts pa = side_points(sa.graph, ea, false);
  Pts pb = side_points(sb.graph, eb, true);
  ExactCoord lift = stack_offset(pa, pb);
  for (auto& p : pb) p.y += lift;

  Drawing out;
  out.mode = Drawing::Mode::Basic;
  out.slopes = basic_slope_set();
  out.positions.assign(g.vertex_count(), Point{});
  for (size_t i = 0; i < pa.size(); ++i) out.positions[sa.to_original[i]] = pa[i];
  for (size_t i = 0; i < pb.size(); ++i) out.positions[sb.to_original[i]] = pb[i];
  verify_or_throw(g, out, "matching cut assembly");
  return out;
}

Drawing expand_triangle(const Drawing& d, const TriangleContraction& rec) {
  const Graph g = expand_contraction(rec);
  const Graph& cg = rec.contracted;
  if (static_cast<int>(d.positions.size()) != cg.vertex_count())
    throw PreconditionViolation("drawing does not match the contracted graph");
  {
    VerificationReport rep = verify_drawing(cg, d);
    if (!rep.ok())
      throw PreconditionViolation("input drawing invalid: " + rep.issues.front());
  }

  const Point v = d.positions[rec.merged_vertex];

  // Rational primitive direction of each boundary edge, pointing from the
  // merged vertex toward its outside neighbor.
  struct Dir {
    Rational dx, dy;
  };
  std::array<Dir, 3> dir;
  std::vector<char> used(d.slopes.size(), 0);
  for (int i = 0; i < 3; ++i) {
    Point w = d.positions[rec.to_contracted[rec.outside[i]]];
    int si = -1;
    for (size_t s = 0; s < d.slopes.size(); ++s)
      if (segment_has_slope(v, w, d.slopes[s])) {
        si = static_cast<int>(s);
        break;
      }
    if (si < 0)
      throw PreconditionViolation("boundary edge slope outside the drawing's slope set");
    used[si] = 1;
    const Slope& sl = d.slopes[si];
    Dir dd = sl.vertical ? Dir{0, 1} : Dir{1, sl.tangent};
    int forward = sl.vertical ? (w.y - v.y).sign() : (w.x - v.x).sign();
    if (forward < 0) dd = Dir{-dd.dx, -dd.dy};
    dir[i] = dd;
  }

  int free = -1;
  for (size_t s = 0; s < d.slopes.size(); ++s)
    if (!used[s]) {
      free = static_cast<int>(s);
      break;
    }
  if (free < 0) throw InternalError("no free slope at the merged vertex");
  Dir f = d.slopes[free].vertical ? Dir{0, 1} : Dir{1, d.slopes[free].tangent};

  // Which side of the free direction each boundary direction falls on. Two
  // of the three share a side; those two slide, the third stays at v.
  std::array<Rational, 3> cr;
  for (int i = 0; i < 3; ++i) {
    cr[i] = dir[i].dx * f.dy - dir[i].dy * f.dx;
    if (cr[i] == 0) throw InternalError("boundary direction parallel to the free slope");
  }
  int keep = -1, si = -1, sj = -1;
  for (int k = 0; k < 3 && keep < 0; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    if ((cr[i] > 0) == (cr[j] > 0)) {
      keep = k;
      si = std::min(i, j);
      sj = std::max(i, j);
    }
  }
  if (keep < 0) throw InternalError("no same-side pair of boundary directions");
  Rational ratio = cr[si] / cr[sj];  // positive by choice of pair

  Pts base(g.vertex_count());
  for (int w = 0; w < g.vertex_count(); ++w) base[w] = d.positions[rec.to_contracted[w]];
  base[rec.triangle[keep]] = v;

  Rational t(1, 4);
  for (int attempt = 0; attempt < 64; ++attempt, t /= 2) {
    Rational s = t * ratio;
    Pts pos = base;
    pos[rec.triangle[si]] = Point{v.x + ExactCoord::from_rational(t * dir[si].dx),
                                  v.y + ExactCoord::from_rational(t * dir[si].dy)};
    pos[rec.triangle[sj]] = Point{v.x + ExactCoord::from_rational(s * dir[sj].dx),
                                  v.y + ExactCoord::from_rational(s * dir[sj].dy)};
    Drawing out{d.mode, std::move(pos), d.slopes};
    if (verify_drawing(g, out).ok()) return out;
  }
  throw InternalError("triangle expansion failed to separate after 64 shrink steps");
}

Drawing draw_cubic_basic(const Graph& g) {
  int n = g.vertex_count();
  Drawing out;
  out.mode = Drawing::Mode::Basic;
  out.slopes = basic_slope_set();
  if (n == 0) return out;

  auto comps = components(g);
  if (comps.size() > 1) {
    out.positions.assign(n, Point{});
    Pts world;
    for (const auto& comp : comps) {
      Subgraph s = induced_subgraph(g, comp);
      Drawing sub = draw_cubic_basic(s.graph);
      Pts local = std::move(sub.positions);
      if (!world.empty()) {
        ExactCoord lift = stack_offset(world, local);
        for (auto& p : local) p.y += lift;
      }
      for (size_t i = 0; i < local.size(); ++i) out.positions[s.to_original[i]] = local[i];
      world.insert(world.end(), local.begin(), local.end());
    }
    verify_or_throw(g, out, "component stack");
    return out;
  }

  bool cubic = true;
  for (int v = 0; v < n && cubic; ++v) cubic = g.degree(v) == 3;
  if (!cubic) return draw_subcubic_connected(g);

  for (const FigureFixture& fx : figure_fixtures()) {
    if (fx.graph.vertex_count() != n || fx.graph.edge_count() != g.edge_count()) continue;
    auto iso = find_isomorphism(g, fx.graph);
    if (!iso) continue;
    out.positions.resize(n);
    for (int v = 0; v < n; ++v) out.positions[v] = fx.drawing.positions[(*iso)[v]];
    verify_or_throw(g, out, "fixture placement");
    return out;
  }

  auto bridges = bridge_edges(g);
  if (!bridges.empty()) return split_and_join(g, {bridges.front()});
  if (auto cut = find_two_edge_cut(g)) return split_and_join(g, {cut->first, cut->second});

  for (const auto& tri : all_triangles(g)) {
    std::optional<TriangleContraction> rec;
    try {
      rec = contract_triangle(g, tri);
    } catch (const NonDisjointBoundary&) {
      continue;
    }
    try {
      return expand_triangle(draw_cubic_basic(rec->contracted), *rec);
    } catch (const Fallback&) {
      continue;
    }
  }

  try {
    return assemble_mcut_drawing(g, find_suitable_mcut(g));
  } catch (const NotFound&) {
  }

  throw Fallback("no basic-slope reduction applies to this graph");
}

}  // namespace slopes
