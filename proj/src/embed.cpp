#include "slopes/embed.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slopes/errors.hpp"
#include "slopes/graph_algos.hpp"
#include "slopes/placement.hpp"
#include "slopes/verifier.hpp"

namespace slopes {
namespace {

using Pts = std::vector<Point>;

ExactCoord ec(long v) { return exact_int(v); }

ExactCoord ec_abs(const ExactCoord& v) { return abs_coord(v); }

const ExactCoord& ec_max(const ExactCoord& a, const ExactCoord& b) {
  return a.compare(b) >= 0 ? a : b;
}

const ExactCoord& ec_min(const ExactCoord& a, const ExactCoord& b) {
  return a.compare(b) <= 0 ? a : b;
}

// How high a column at x0 must start so that every listed point lies
// strictly below both 45-degree diagonals through the column point.
ExactCoord cone_reach(const Pts& ps, const ExactCoord& x0) {
  ExactCoord m;
  for (const auto& p : ps) m = ec_max(m, p.y + ec_abs(x0 - p.x));
  return m;
}

ExactCoord path_slack(const std::vector<ExactCoord>& cols) {
  ExactCoord s;
  for (size_t i = 1; i < cols.size(); ++i) s += ec_abs(cols[i] - cols[i - 1]);
  return s;
}

class Minter {
 public:
  explicit Minter(int first) : next_(first) {}

  ExactCoord fresh() {
    minted_.push_back(next_);
    return ExactCoord::basis(next_++);
  }

  const std::vector<int>& minted() const { return minted_; }

 private:
  int next_;
  std::vector<int> minted_;
};

struct Ctx {
  Minter mint;
};

int first_free_index(const XValues& xs) {
  int hi = 0;
  for (const auto& [v, val] : xs)
    for (int i : val.support()) hi = std::max(hi, i);
  return hi + 1;
}

std::set<int> allowed_indices(const XValues& xs, const Ctx& ctx) {
  std::set<int> s{0};
  for (const auto& [v, val] : xs)
    for (int i : val.support()) s.insert(i);
  for (int i : ctx.mint.minted()) s.insert(i);
  return s;
}

// Full exact audit of a drawing against the guarantees the embedder owes:
// a valid basic-slope drawing, prescribed columns hit, nothing due North of
// a degree-two vertex, nothing North or Northwest of a degree-one vertex,
// and no x-coordinate escaping the allowed rational span.
std::vector<std::string> audit(const Graph& g, const Pts& pts, const XValues& xs,
                               const std::set<int>& allowed) {
  Drawing d{Drawing::Mode::Basic, pts, basic_slope_set()};
  std::vector<std::string> issues = verify_drawing(g, d).issues;
  const int n = g.vertex_count();
  for (const auto& [v, val] : xs) {
    if (!(pts[v].x == val))
      issues.push_back("vertex " + std::to_string(v) + " is off its prescribed column");
  }
  for (int v = 0; v < n; ++v) {
    int dv = g.degree(v);
    if (dv >= 3 || dv == 0) continue;
    for (int q = 0; q < n; ++q) {
      if (q == v) continue;
      ExactCoord dy = pts[q].y - pts[v].y;
      if (dy.sign() <= 0) continue;
      if (pts[q].x == pts[v].x)
        issues.push_back("vertex " + std::to_string(q) + " is North of low-degree vertex " +
                         std::to_string(v));
      if (dv == 1 && dy == pts[v].x - pts[q].x)
        issues.push_back("vertex " + std::to_string(q) + " is Northwest of pendant vertex " +
                         std::to_string(v));
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int i : pts[v].x.support()) {
      if (!allowed.count(i)) {
        issues.push_back("x-coordinate of vertex " + std::to_string(v) +
                         " uses a foreign basis element");
        break;
      }
    }
  }
  return issues;
}

void enforce(const Graph& g, const Pts& pts, const XValues& xs, const Ctx& ctx,
             const char* stage) {
  auto issues = audit(g, pts, xs, allowed_indices(xs, ctx));
  if (!issues.empty())
    throw InternalError(std::string(stage) + ": " + issues.front());
}

// ---------------------------------------------------------------------------
// Closed walks (cycles).

// Places path columns left to right along a West / Southeast staircase from
// the axis and closes the walk with a free vertex. Returns nothing when the
// walk never descends (then the reversed orientation must be used). The
// free vertex goes on the x-axis East of the start when the Northeast ray
// from the last point gets there, and otherwise on the Northwest ray of the
// start, strictly above the axis; both spots keep every other vertex away
// from the North, Northeast and Northwest of the free vertex.
std::optional<Pts> staircase_closed(const std::vector<ExactCoord>& cols) {
  const size_t m = cols.size();
  Pts pts(m + 1);
  pts[0] = Point{cols[0], ExactCoord{}};
  ExactCoord ascent;
  for (size_t i = 1; i < m; ++i) {
    ExactCoord dx = cols[i] - cols[i - 1];
    int s = dx.sign();
    if (s == 0) throw InternalError("closed walk met two equal columns");
    if (s > 0) {
      pts[i] = Point{cols[i], pts[i - 1].y - dx};
      ascent += dx;
    } else {
      pts[i] = Point{cols[i], pts[i - 1].y};
    }
  }
  if (ascent.is_zero()) return std::nullopt;
  ExactCoord axis_x = cols[m - 1] + ascent;
  int side = axis_x.compare(cols[0]);
  if (side == 0) throw InternalError("closed walk collapsed onto its start column");
  if (side > 0) {
    pts[m] = Point{axis_x, ExactCoord{}};
  } else {
    Rational half(1, 2);
    pts[m] = Point{(cols[0] + axis_x) * half, (cols[0] - axis_x) * half};
  }
  return pts;
}

// Points for a closed walk over the given path columns; index i holds the
// i-th path vertex and the last entry the free closing vertex.
Pts closed_walk_points(const std::vector<ExactCoord>& cols) {
  if (auto fwd = staircase_closed(cols)) return *fwd;
  std::vector<ExactCoord> rev(cols.rbegin(), cols.rend());
  auto bwd = staircase_closed(rev);
  if (!bwd) throw InternalError("both walk orientations degenerate");
  const size_t m = cols.size();
  Pts pts(m + 1);
  for (size_t i = 0; i < m; ++i) pts[i] = (*bwd)[m - 1 - i];
  pts[m] = (*bwd)[m];
  return pts;
}

std::vector<int> rotate_cycle_to(const std::vector<int>& order, int first) {
  auto it = std::find(order.begin(), order.end(), first);
  if (it == order.end()) throw InternalError("vertex missing from cycle order");
  std::vector<int> out(it, order.end());
  out.insert(out.end(), order.begin(), it);
  return out;
}

// g is a cycle; xs covers all vertices except exactly one, which closes the
// walk with a derived column.
Pts draw_cycle_graph(const Graph& g, const XValues& xs) {
  const int n = g.vertex_count();
  if (static_cast<int>(xs.size()) != n - 1)
    throw InternalError("cycle piece needs exactly one free vertex");
  int free_v = -1;
  for (int v = 0; v < n; ++v)
    if (!xs.count(v)) { free_v = v; break; }
  std::vector<int> order = rotate_cycle_to(cycle_order(g), free_v);
  std::vector<ExactCoord> cols;
  for (int i = 1; i < n; ++i) cols.push_back(xs.at(order[i]));
  Pts walk = closed_walk_points(cols);
  Pts pts(n);
  pts[order[0]] = walk[n - 1];
  for (int i = 1; i < n; ++i) pts[order[i]] = walk[i - 1];
  return pts;
}

// ---------------------------------------------------------------------------
// Two cycles joined by one edge.

Pts draw_two_joined(const Graph& g, const XValues& xs) {
  std::pair<int, int> join;
  if (!is_two_cycles_joined_by_edge(g, &join))
    throw InternalError("piece is not two cycles joined by an edge");
  std::vector<std::pair<int, int>> rest;
  for (const auto& e : g.edges()) {
    bool is_join = (e.first == join.first && e.second == join.second) ||
                   (e.first == join.second && e.second == join.first);
    if (!is_join) rest.push_back(e);
  }
  Graph cut = Graph::from_edges(g.vertex_count(), rest);
  auto comps = components(cut);
  if (comps.size() != 2) throw InternalError("joined cycles did not split in two");

  // Draw each cycle as a closed walk with its joint vertex free.
  Pts pts(g.vertex_count());
  int joints[2] = {join.first, join.second};
  for (int c = 0; c < 2; ++c) {
    Subgraph s = induced_subgraph(cut, comps[c]);
    int joint = -1;
    for (int v : comps[c])
      if (v == joints[0] || v == joints[1]) joint = v;
    std::vector<int> order = rotate_cycle_to(cycle_order(s.graph), s.to_sub[joint]);
    std::vector<ExactCoord> cols;
    for (size_t i = 1; i < order.size(); ++i) cols.push_back(xs.at(s.to_original[order[i]]));
    Pts walk = closed_walk_points(cols);
    pts[joint] = walk[order.size() - 1];
    for (size_t i = 1; i < order.size(); ++i) pts[s.to_original[order[i]]] = walk[i - 1];
  }

  // Put the cycle whose joint sits further East on top, reflected, so the
  // joining edge climbs Northeast between the two peaks.
  int lo = joints[0], hi = joints[1];
  if (pts[hi].x.compare(pts[lo].x) < 0) std::swap(lo, hi);
  const std::vector<int>& hi_comp =
      std::find(comps[0].begin(), comps[0].end(), hi) != comps[0].end() ? comps[0] : comps[1];
  ExactCoord axis = pts[hi].y;
  for (int v : hi_comp) pts[v] = reflect_across_horizontal(pts[v], axis);
  ExactCoord target = pts[lo].y + (pts[hi].x - pts[lo].x);
  ExactCoord shift = target - pts[hi].y;
  for (int v : hi_comp) pts[v] = translate(pts[v], ExactCoord{}, shift);
  return pts;
}

// ---------------------------------------------------------------------------
// Staircase walks hanging off an anchor.

// One point per column, stepping West (same height) or Northeast (rising)
// from the previous point.
Pts walk_flat_or_up(const Point& from, const std::vector<ExactCoord>& cols) {
  Pts out;
  const Point* prev = &from;
  for (const auto& c : cols) {
    ExactCoord dx = c - prev->x;
    int s = dx.sign();
    if (s == 0) throw InternalError("walk met an occupied column");
    out.push_back(s < 0 ? Point{c, prev->y} : Point{c, prev->y + dx});
    prev = &out.back();
  }
  return out;
}

// One point per column, always strictly rising: Northeast or Northwest.
Pts walk_climb(const Point& from, const std::vector<ExactCoord>& cols) {
  Pts out;
  const Point* prev = &from;
  for (const auto& c : cols) {
    ExactCoord dx = c - prev->x;
    if (dx.sign() == 0) throw InternalError("climb met an occupied column");
    out.push_back(Point{c, prev->y + ec_abs(dx)});
    prev = &out.back();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared recursion plumbing.

Pts embed_rec(const Graph& g, const XValues& xs, Ctx& ctx);

// Draws any connected piece: routes cycles (one free vertex) and two joined
// cycles to their dedicated walks, everything else into the recursion, and
// audits the result before handing it back.
Pts embed_piece(const Graph& g, const XValues& xs, Ctx& ctx) {
  if (!is_connected(g)) throw InternalError("piece must be connected");
  Pts pts;
  if (g.vertex_count() <= 2) {
    pts.resize(g.vertex_count());
    for (const auto& [v, val] : xs) pts[v] = Point{val, ExactCoord{}};
  } else if (is_cycle_graph(g)) {
    pts = draw_cycle_graph(g, xs);
  } else if (is_two_cycles_joined_by_edge(g)) {
    pts = draw_two_joined(g, xs);
  } else {
    pts = embed_rec(g, xs, ctx);
  }
  enforce(g, pts, xs, ctx, "piece assembly");
  return pts;
}

void place_back(Pts& world, const Subgraph& s, const Pts& local) {
  for (size_t i = 0; i < local.size(); ++i) world[s.to_original[i]] = local[i];
}

// Prescriptions for a part cut out of the current graph: parent values are
// kept, overrides (parent ids) win, and vertices the parent had at degree
// three but the part leaves below three get fresh columns. On a cycle part
// the lowest such vertex stays free instead, closing the walk.
XValues part_values(const Graph& part, const Subgraph& s, const XValues& parent,
                    const std::map<int, ExactCoord>& overrides, Ctx& ctx) {
  XValues out;
  std::vector<int> need;
  for (int sv = 0; sv < part.vertex_count(); ++sv) {
    int ov = s.to_original[sv];
    auto o = overrides.find(ov);
    if (o != overrides.end()) {
      out.emplace(sv, o->second);
    } else if (auto p = parent.find(ov); p != parent.end()) {
      out.emplace(sv, p->second);
    } else if (part.degree(sv) <= 2) {
      need.push_back(sv);
    }
  }
  size_t first = 0;
  if (is_cycle_graph(part)) {
    if (need.empty()) throw InternalError("cycle part with every vertex pinned");
    first = 1;  // lowest unpinned vertex closes the walk
  }
  for (size_t i = first; i < need.size(); ++i) out.emplace(need[i], ctx.mint.fresh());
  return out;
}

Subgraph compose(const Subgraph& outer, const Subgraph& inner) {
  Subgraph s;
  s.graph = inner.graph;
  s.to_original.resize(inner.to_original.size());
  for (size_t i = 0; i < inner.to_original.size(); ++i)
    s.to_original[i] = outer.to_original[inner.to_original[i]];
  s.to_sub.assign(outer.to_sub.size(), -1);
  for (size_t i = 0; i < s.to_original.size(); ++i) s.to_sub[s.to_original[i]] = i;
  return s;
}

std::vector<int> all_but(int n, const std::vector<int>& drop) {
  std::vector<bool> gone(n, false);
  for (int v : drop) gone[v] = true;
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) keep.push_back(v);
  return keep;
}

// ---------------------------------------------------------------------------
// Paths and pendant paths.

Pts draw_path_graph(const Graph& g, const XValues& xs) {
  const int n = g.vertex_count();
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v)
    if (g.degree(v) == 1) start = v;
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < n) {
    for (int nb : g.neighbors(cur))
      if (nb != prev) { prev = cur; cur = nb; break; }
    order.push_back(cur);
  }
  // Anchor the far end on the axis and walk back West or Northeast, which
  // keeps the far end clear to its North and Northwest and leaves the walk
  // end weakly highest.
  Pts pts(n);
  pts[order[n - 1]] = Point{xs.at(order[n - 1]), ExactCoord{}};
  std::vector<ExactCoord> cols;
  for (int i = n - 2; i >= 0; --i) cols.push_back(xs.at(order[i]));
  Pts walk = walk_flat_or_up(pts[order[n - 1]], cols);
  for (int i = n - 2; i >= 0; --i) pts[order[i]] = walk[n - 2 - i];
  return pts;
}

Pts draw_with_pendant_path(const Graph& g, const XValues& xs, Ctx& ctx) {
  const int n = g.vertex_count();
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v)
    if (g.degree(v) == 1) start = v;
  std::vector<int> path{start};
  int prev = -1, cur = start, w = -1;
  while (w < 0) {
    int nxt = -1;
    for (int nb : g.neighbors(cur))
      if (nb != prev) { nxt = nb; break; }
    if (nxt < 0) throw InternalError("pendant path lost its attachment");
    if (g.degree(nxt) == 3) {
      w = nxt;
    } else {
      path.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
  }

  Subgraph rest = induced_subgraph(g, all_but(n, path));
  Pts pts(n);
  std::vector<ExactCoord> back_cols;  // tail-1 .. head
  for (int i = static_cast<int>(path.size()) - 2; i >= 0; --i)
    back_cols.push_back(xs.at(path[i]));
  ExactCoord tail_col = xs.at(path.back());

  if (is_cycle_graph(rest.graph)) {
    XValues sub = part_values(rest.graph, rest, xs, {}, ctx);
    Pts rp = embed_piece(rest.graph, sub, ctx);
    place_back(pts, rest, rp);
    // Hang the path off the free peak: one diagonal step onto the pendant
    // column, then West / Northeast.
    Point wp = pts[w];
    pts[path.back()] = Point{tail_col, wp.y + ec_abs(tail_col - wp.x)};
  } else {
    XValues sub = part_values(rest.graph, rest, xs, {{w, tail_col}}, ctx);
    Pts rp = embed_piece(rest.graph, sub, ctx);
    place_back(pts, rest, rp);
    // The tail goes straight above its attachment, beyond every diagonal
    // shadow of the drawn part plus room for the walk back.
    ExactCoord top = cone_reach(rp, tail_col) + path_slack(back_cols) +
                     ec_abs(tail_col - (back_cols.empty() ? tail_col : back_cols.front()));
    pts[path.back()] = Point{tail_col, ec(integer_above(top) + 1)};
  }
  Pts walk = walk_flat_or_up(pts[path.back()], back_cols);
  for (size_t i = 0; i < back_cols.size(); ++i)
    pts[path[path.size() - 2 - i]] = walk[i];
  return pts;
}

// ---------------------------------------------------------------------------
// Theta subgraphs: an edge ab plus two common neighbors c, d of a and b.

struct ThetaSpot {
  int a, b, c, d;
};

std::optional<ThetaSpot> find_theta(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    std::vector<int> common;
    for (int w : g.neighbors(u))
      if (w != v && g.has_edge(w, v)) common.push_back(w);
    if (common.size() >= 2) return ThetaSpot{u, v, common[0], common[1]};
  }
  return std::nullopt;
}

// The whole graph is the theta: c and d carry columns, a and b flank.
Pts draw_theta_alone(const ThetaSpot& th, const XValues& xs) {
  ExactCoord xc = xs.at(th.c), xd = xs.at(th.d);
  ExactCoord s = ec_abs(xd - xc);
  Pts pts(4);
  pts[th.c] = Point{xc, ExactCoord{}};
  pts[th.a] = Point{xd, s};
  pts[th.b] = Point{xc + (xc - xd), s};
  pts[th.d] = Point{xd, s + s + s};
  return pts;
}

// Five vertices: the theta plus one vertex adjacent to both c and d.
Pts draw_theta_apex(const ThetaSpot& th, int e, const XValues& xs) {
  ExactCoord xe = xs.at(e);
  Pts pts(5);
  pts[e] = Point{xe, ExactCoord{}};
  pts[th.c] = Point{xe + ec(1), ec(1)};
  pts[th.d] = Point{xe - ec(1), ec(1)};
  pts[th.a] = Point{xe + ec(1), ec(3)};
  pts[th.b] = Point{xe - ec(1), ec(3)};
  return pts;
}

// Theta plus apex hanging off the rest of the graph through the apex's
// third neighbor f. The block keeps its shape, scaled small and attached
// either on the North ray of f (f free of column duties) or on its
// Northwest ray (f prescribed, so its column must stay clear).
Pts draw_theta_apex_tail(const Graph& g, const ThetaSpot& th, int e, const XValues& xs,
                         Ctx& ctx) {
  const int n = g.vertex_count();
  int f = -1;
  for (int nb : g.neighbors(e))
    if (nb != th.c && nb != th.d) f = nb;
  if (f < 0) throw InternalError("apex lost its outside neighbor");
  std::vector<int> block{th.a, th.b, th.c, th.d, e};
  Subgraph rest = induced_subgraph(g, all_but(n, block));
  XValues sub = part_values(rest.graph, rest, xs, {}, ctx);
  Pts rp = embed_piece(rest.graph, sub, ctx);
  Pts pts(n);
  place_back(pts, rest, rp);

  const bool f_pinned = g.degree(f) == 2;
  Point fp = pts[f];
  // Block shape relative to the apex; the pinned flavor is the upright
  // shape rotated a three-eighths turn clockwise so it leaves f's column
  // alone and meets f along a -1 diagonal.
  std::vector<std::pair<int, int>> shape_up = {{1, 1}, {-1, 1}, {1, 3}, {-1, 3}, {0, 0}};
  std::vector<std::pair<int, int>> shape_nw = {{0, -4}, {4, 0}, {4, -8}, {8, -4}, {0, 0}};
  const auto& shape = f_pinned ? shape_nw : shape_up;
  Rational sigma(1);
  for (int round = 0; round < 64; ++round, sigma /= 2) {
    Point base = f_pinned ? Point{fp.x - ExactCoord::from_rational(sigma),
                                  fp.y + ExactCoord::from_rational(sigma)}
                          : Point{fp.x, fp.y + ExactCoord::from_rational(sigma)};
    int ids[5] = {th.c, th.d, th.a, th.b, e};
    for (int i = 0; i < 5; ++i) {
      ExactCoord dx = ExactCoord::from_rational(Rational(shape[i].first) * sigma);
      ExactCoord dy = ExactCoord::from_rational(Rational(shape[i].second) * sigma);
      pts[ids[i]] = Point{base.x + dx, base.y + dy};
    }
    if (audit(g, pts, xs, allowed_indices(xs, ctx)).empty()) return pts;
  }
  throw InternalError("theta block found no clear scale");
}

// Theta where only one of c, d has a third neighbor. The other one and the
// flanks come back as a small stack over the kept vertex: flank a straight
// above, flank b on the Northwest diagonal, d on top.
Pts draw_theta_stack(const Graph& g, ThetaSpot th, const XValues& xs, Ctx& ctx) {
  auto third = [&](int v) {
    for (int nb : g.neighbors(v))
      if (nb != th.a && nb != th.b) return nb;
    return -1;
  };
  if (third(th.c) < 0) std::swap(th.c, th.d);  // c keeps its neighbor
  const int n = g.vertex_count();
  ExactCoord xd = xs.at(th.d);
  Subgraph rest = induced_subgraph(g, all_but(n, {th.a, th.b, th.d}));
  XValues sub = part_values(rest.graph, rest, xs, {{th.c, xd}}, ctx);
  Pts rp = embed_piece(rest.graph, sub, ctx);
  Pts pts(n);
  place_back(pts, rest, rp);
  Point cp = pts[th.c];
  Rational beta(1);
  for (int round = 0; round < 64; ++round, beta /= 2) {
    ExactCoord b = ExactCoord::from_rational(beta);
    pts[th.a] = Point{cp.x, cp.y + b};
    pts[th.b] = Point{cp.x - b, cp.y + b};
    pts[th.d] = Point{cp.x, cp.y + b + b};
    if (audit(g, pts, xs, allowed_indices(xs, ctx)).empty()) return pts;
  }
  throw InternalError("theta stack found no clear scale");
}

// Theta whose low vertices c, d have distinct third neighbors. The four
// theta vertices shrink to a small square around a relay vertex that stands
// in for them in the rest of the graph; c and d stay on the lines the relay
// edges used, so the outside edges keep their slopes.
Pts draw_theta_square(const Graph& g, const ThetaSpot& th, int tc, int td, const XValues& xs,
                      Ctx& ctx) {
  const int n = g.vertex_count();
  std::vector<int> keep = all_but(n, {th.a, th.b, th.c, th.d});
  // Build the relay graph by hand: kept vertices first, relay last.
  std::vector<int> to_orig = keep;
  std::vector<int> to_sub(n, -1);
  for (size_t i = 0; i < keep.size(); ++i) to_sub[keep[i]] = static_cast<int>(i);
  const int relay = static_cast<int>(keep.size());
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges())
    if (to_sub[u] >= 0 && to_sub[v] >= 0) edges.push_back({to_sub[u], to_sub[v]});
  edges.push_back({to_sub[tc], relay});
  edges.push_back({to_sub[td], relay});
  Graph rg = Graph::from_edges(relay + 1, edges);

  XValues sub;
  std::vector<int> need;
  for (int sv = 0; sv < relay; ++sv) {
    if (auto p = xs.find(to_orig[sv]); p != xs.end()) sub.emplace(sv, p->second);
  }
  if (is_cycle_graph(rg)) {
    // the relay stays free and closes the walk
  } else {
    sub.emplace(relay, ctx.mint.fresh());
  }
  Pts rp = embed_piece(rg, sub, ctx);
  Pts pts(n);
  for (int sv = 0; sv < relay; ++sv) pts[to_orig[sv]] = rp[sv];
  Point vp = rp[relay];

  auto octant = [&](int target) {
    ExactCoord dx = rp[to_sub[target]].x - vp.x;
    ExactCoord dy = rp[to_sub[target]].y - vp.y;
    return std::pair<int, int>{dx.sign(), dy.sign()};
  };
  auto [sx1, sy1] = octant(tc);
  auto [sx2, sy2] = octant(td);
  const int offs[4] = {1, -1, 2, -2};
  Rational sigma(1);
  for (int round = 0; round < 48; ++round, sigma /= 2) {
    for (int ki = 0; ki < 4; ++ki) {
      for (int mi = 0; mi < 4; ++mi) {
        Rational k = Rational(offs[ki]) * sigma, m = Rational(offs[mi]) * sigma;
        Point c{vp.x + ExactCoord::from_rational(k * sx1), vp.y + ExactCoord::from_rational(k * sy1)};
        Point d{vp.x + ExactCoord::from_rational(m * sx2), vp.y + ExactCoord::from_rational(m * sy2)};
        ExactCoord ex = d.x - c.x, ey = d.y - c.y;
        bool basic = ex.is_zero() || ey.is_zero() || ex == ey || ex == -ey;
        if (!basic || (ex.is_zero() && ey.is_zero())) continue;
        Rational half(1, 2);
        Point mid{(c.x + d.x) * half, (c.y + d.y) * half};
        ExactCoord hx = -(ey * half), hy = ex * half;
        pts[th.c] = c;
        pts[th.d] = d;
        pts[th.a] = Point{mid.x + hx, mid.y + hy};
        pts[th.b] = Point{mid.x - hx, mid.y - hy};
        if (audit(g, pts, xs, allowed_indices(xs, ctx)).empty()) return pts;
      }
    }
  }
  throw InternalError("theta square found no clear placement");
}

Pts draw_with_theta(const Graph& g, const ThetaSpot& th, const XValues& xs, Ctx& ctx) {
  const int n = g.vertex_count();
  if (n == 4) {
    if (g.has_edge(th.c, th.d))
      throw InternalError("four-clique cannot reach the recursion");
    return draw_theta_alone(th, xs);
  }
  int apex = -1;
  for (int w : g.neighbors(th.c))
    if (w != th.a && w != th.b && g.has_edge(w, th.d)) { apex = w; break; }
  if (apex >= 0) {
    if (n == 5) return draw_theta_apex(th, apex, xs);
    return draw_theta_apex_tail(g, th, apex, xs, ctx);
  }
  auto third = [&](int v) {
    for (int nb : g.neighbors(v))
      if (nb != th.a && nb != th.b) return nb;
    return -1;
  };
  int tc = third(th.c), td = third(th.d);
  if (tc < 0 || td < 0) return draw_theta_stack(g, th, xs, ctx);
  return draw_theta_square(g, th, tc, td, xs, ctx);
}

// ---------------------------------------------------------------------------
// Every degree-two vertex on bridges only: split at a bridge whose far side
// carries no column duties, draw both sides sharing the split vertex, and
// enlarge (possibly turning an eighth) the duty-free side until it fits.

Pts draw_bridge_split(const Graph& g, const XValues& xs, Ctx& ctx) {
  const int n = g.vertex_count();
  std::vector<bool> is_bridge(g.edge_count(), false);
  for (int e : bridge_edges(g)) is_bridge[e] = true;

  int best_w = -1, best_edge = -1;
  std::vector<int> best_far;
  for (int w = 0; w < n; ++w) {
    if (g.degree(w) != 2) continue;
    for (int e : g.incident_edges(w)) {
      if (!is_bridge[e]) throw InternalError("cycle-free low vertex met a non-bridge");
      std::vector<std::pair<int, int>> pruned;
      for (int id = 0; id < g.edge_count(); ++id)
        if (id != e) pruned.push_back(g.edge(id));
      Graph cut = Graph::from_edges(n, pruned);
      for (const auto& comp : components(cut)) {
        if (std::find(comp.begin(), comp.end(), w) != comp.end()) continue;
        bool clean = true;
        for (int q : comp)
          if (g.degree(q) == 2) clean = false;
        if (!clean) continue;
        if (best_w < 0 || comp.size() < best_far.size()) {
          best_w = w;
          best_edge = e;
          best_far = comp;
        }
      }
    }
  }
  if (best_w < 0) throw InternalError("no duty-free side at any bridge");

  std::vector<int> far_side = best_far;
  far_side.push_back(best_w);
  std::sort(far_side.begin(), far_side.end());
  Subgraph far = induced_subgraph(g, far_side);
  Subgraph near = induced_subgraph(g, all_but(n, best_far));

  XValues far_vals = part_values(far.graph, far, xs, {}, ctx);
  XValues near_vals = part_values(near.graph, near, xs, {}, ctx);
  Pts fp = embed_piece(far.graph, far_vals, ctx);
  Pts np = embed_piece(near.graph, near_vals, ctx);

  Point far_w = fp[far.to_sub[best_w]];
  Point near_w = np[near.to_sub[best_w]];
  auto dir = [&](const Pts& ps, const Subgraph& s, int from_orig, int to_orig) {
    ExactCoord dx = ps[s.to_sub[to_orig]].x - ps[s.to_sub[from_orig]].x;
    ExactCoord dy = ps[s.to_sub[to_orig]].y - ps[s.to_sub[from_orig]].y;
    return std::pair<int, int>{dx.sign(), dy.sign()};
  };
  int far_nb = g.other_end(best_edge, best_w);
  int near_nb = -1;
  for (int nb : g.neighbors(best_w))
    if (nb != far_nb) near_nb = nb;
  bool turn = dir(fp, far, best_w, far_nb) == dir(np, near, best_w, near_nb);

  Pts pts(n);
  place_back(pts, near, np);
  long lambda = 1;
  for (int round = 0; round < 40; ++round, lambda *= 2) {
    for (size_t i = 0; i < fp.size(); ++i) {
      Point q = scale_about(fp[i], far_w, Rational(lambda));
      if (turn) q = rotate_eighth_clockwise(q, far_w);
      pts[far.to_original[i]] =
          translate(q, near_w.x - far_w.x, near_w.y - far_w.y);
    }
    if (audit(g, pts, xs, allowed_indices(xs, ctx)).empty()) return pts;
  }
  throw InternalError("duty-free side found no clear scale");
}

// ---------------------------------------------------------------------------
// Chains: maximal runs of adjacent degree-two vertices.

struct Chain {
  std::vector<int> verts;
  int u = -1;  // outside neighbor of the front
  int w = -1;  // outside neighbor of the back
};

std::vector<Chain> low_chains(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Chain> out;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 2 || seen[v]) continue;
    std::vector<int> run{v};
    seen[v] = true;
    for (int side = 0; side < 2; ++side) {
      int prev = run.size() >= 2 ? run[run.size() - 2] : -1;
      int cur = run.back();
      for (;;) {
        int nxt = -1;
        for (int nb : g.neighbors(cur))
          if (nb != prev && g.degree(nb) == 2 && !seen[nb]) nxt = nb;
        if (nxt < 0) break;
        seen[nxt] = true;
        run.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      std::reverse(run.begin(), run.end());
    }
    Chain c;
    c.verts = run;
    auto outside = [&](int endv, int inward) {
      for (int nb : g.neighbors(endv))
        if (nb != inward && g.degree(nb) == 3) return nb;
      return -1;
    };
    c.u = outside(run.front(), run.size() >= 2 ? run[1] : -1);
    c.w = outside(run.back(), run.size() >= 2 ? run[run.size() - 2] : -1);
    if (run.size() == 1) {
      // two distinct outside neighbors; pick them in neighbor order
      c.u = g.neighbors(run[0])[0];
      c.w = g.neighbors(run[0])[1];
    }
    if (c.verts.front() > c.verts.back()) {
      std::reverse(c.verts.begin(), c.verts.end());
      std::swap(c.u, c.w);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Draws the graph with the chain removed (two components, the one at w a
// cycle through w), climbs the chain off the u side, and hangs the reflected
// w cycle above so the last chain edge rises into w.
Pts chain_and_cycle(const Graph& g, const std::vector<int>& chain, int u, int w,
                    const std::vector<int>& comp_u, const std::vector<int>& comp_w,
                    const XValues& xs, Ctx& ctx) {
  const int n = g.vertex_count();
  Pts pts(n);
  Subgraph su = induced_subgraph(g, comp_u);
  Subgraph sw = induced_subgraph(g, comp_w);
  std::vector<ExactCoord> cols;
  for (int v : chain) cols.push_back(xs.at(v));

  bool u_cycle = is_cycle_graph(su.graph);
  std::map<int, ExactCoord> over;
  if (!u_cycle) over.emplace(u, cols.front());
  XValues uv = part_values(su.graph, su, xs, over, ctx);
  Pts up = embed_piece(su.graph, uv, ctx);
  place_back(pts, su, up);

  Point upos = pts[u];
  Point head;
  if (u_cycle) {
    head = Point{cols.front(), upos.y + ec_abs(cols.front() - upos.x)};
  } else {
    ExactCoord top = cone_reach(up, cols.front()) + path_slack(cols);
    head = Point{cols.front(), ec(integer_above(top) + 1)};
  }
  pts[chain.front()] = head;
  if (chain.size() >= 2) {
    std::vector<ExactCoord> rest_cols(cols.begin() + 1, cols.end());
    Pts climbed = walk_climb(head, rest_cols);
    for (size_t i = 1; i < chain.size(); ++i) pts[chain[i]] = climbed[i - 1];
  }

  XValues wv = part_values(sw.graph, sw, xs, {}, ctx);
  Pts wp = embed_piece(sw.graph, wv, ctx);
  // Upside down, so w sits at the bottom of its cycle.
  ExactCoord axis = wp[sw.to_sub[w]].y;
  for (auto& p : wp) p = reflect_across_horizontal(p, axis);
  Point tail = pts[chain.back()];
  ExactCoord wcol = wp[sw.to_sub[w]].x;
  ExactCoord target = tail.y + ec_abs(wcol - tail.x);
  ExactCoord shift = target - wp[sw.to_sub[w]].y;
  for (auto& p : wp) p = translate(p, ExactCoord{}, shift);
  place_back(pts, sw, wp);
  return pts;
}

Pts draw_with_chain(const Graph& g, const XValues& xs, Ctx& ctx) {
  const int n = g.vertex_count();
  auto chains = low_chains(g);
  const Chain* pick = nullptr;
  for (const auto& c : chains) {
    if (!pick || c.verts.size() > pick->verts.size() ||
        (c.verts.size() == pick->verts.size() && c.verts < pick->verts))
      pick = &c;
  }
  if (!pick || pick->verts.size() < 2)
    throw InternalError("adjacent low vertices vanished");
  Chain ch = *pick;

  if (ch.u != ch.w) {
    Subgraph rest = induced_subgraph(g, all_but(n, ch.verts));
    auto comps_sub = components(rest.graph);
    std::vector<ExactCoord> cols;
    for (int v : ch.verts) cols.push_back(xs.at(v));

    if (comps_sub.size() == 1) {
      Pts pts(n);
      bool cyc = is_cycle_graph(rest.graph);
      std::map<int, ExactCoord> over;
      over.emplace(ch.w, cols.back());
      if (!cyc) over.emplace(ch.u, cols.front());
      XValues sub = part_values(rest.graph, rest, xs, over, ctx);
      Pts rp = embed_piece(rest.graph, sub, ctx);
      place_back(pts, rest, rp);
      Point upos = pts[ch.u];
      Point head = cyc ? Point{cols.front(), upos.y + ec_abs(cols.front() - upos.x)}
                       : Point{cols.front(),
                               ec(integer_above(cone_reach(rp, cols.front()) +
                                                path_slack(cols)) +
                                  1)};
      pts[ch.verts.front()] = head;
      std::vector<ExactCoord> up_cols(cols.begin() + 1, cols.end());
      Pts climbed = walk_climb(head, up_cols);
      for (size_t i = 1; i < ch.verts.size(); ++i) pts[ch.verts[i]] = climbed[i - 1];
      return pts;
    }
    if (comps_sub.size() != 2)
      throw InternalError("chain removal split the graph in more than two");

    // Map component vertex lists back to original ids.
    std::vector<int> ca, cb;
    for (int sv : comps_sub[0]) ca.push_back(rest.to_original[sv]);
    for (int sv : comps_sub[1]) cb.push_back(rest.to_original[sv]);
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    auto holds = [](const std::vector<int>& c, int v) {
      return std::find(c.begin(), c.end(), v) != c.end();
    };
    std::vector<int> comp_u = holds(ca, ch.u) ? ca : cb;
    std::vector<int> comp_w = holds(ca, ch.w) ? ca : cb;
    if (holds(comp_u, ch.w))
      throw InternalError("chain ends fell into one component");

    Subgraph su = induced_subgraph(g, comp_u);
    Subgraph sw = induced_subgraph(g, comp_w);
    bool cyc_u = is_cycle_graph(su.graph);
    bool cyc_w = is_cycle_graph(sw.graph);
    if (cyc_u && !cyc_w) {
      std::reverse(ch.verts.begin(), ch.verts.end());
      std::swap(ch.u, ch.w);
      std::swap(comp_u, comp_w);
      std::swap(cyc_u, cyc_w);
    }
    if (cyc_w)
      return chain_and_cycle(g, ch.verts, ch.u, ch.w, comp_u, comp_w, xs, ctx);

    // Neither side is a cycle: draw both, stack the w side above, and climb
    // over everything, dropping verticals onto u and w.
    Pts pts(n);
    su = induced_subgraph(g, comp_u);
    sw = induced_subgraph(g, comp_w);
    XValues uv = part_values(su.graph, su, xs, {{ch.u, cols.front()}}, ctx);
    XValues wv = part_values(sw.graph, sw, xs, {{ch.w, cols.back()}}, ctx);
    Pts up = embed_piece(su.graph, uv, ctx);
    Pts wp = embed_piece(sw.graph, wv, ctx);
    ExactCoord lift = stack_offset(up, wp);
    for (auto& p : wp) p = translate(p, ExactCoord{}, lift);
    place_back(pts, su, up);
    place_back(pts, sw, wp);
    Pts both = up;
    both.insert(both.end(), wp.begin(), wp.end());
    Point head{cols.front(),
               ec(integer_above(cone_reach(both, cols.front()) + path_slack(cols)) + 1)};
    pts[ch.verts.front()] = head;
    std::vector<ExactCoord> up_cols(cols.begin() + 1, cols.end());
    Pts climbed = walk_climb(head, up_cols);
    for (size_t i = 1; i < ch.verts.size(); ++i) pts[ch.verts[i]] = climbed[i - 1];
    return pts;
  }

  // Both chain ends meet the same vertex u: the chain closes a cycle at u.
  int t = -1;
  for (int nb : g.neighbors(ch.u))
    if (nb != ch.verts.front() && nb != ch.verts.back()) t = nb;
  if (t < 0) throw InternalError("closing vertex lost its third neighbor");

  if (g.degree(t) == 2) {
    // Walk the chain through t away from u; the graph splits into the
    // closed cycle at u and the component behind the far attachment.
    std::vector<int> tpath{t};
    int prev = ch.u, cur = t;
    while (true) {
      int nxt = -1;
      for (int nb : g.neighbors(cur))
        if (nb != prev) nxt = nb;
      if (g.degree(nxt) != 2) break;
      tpath.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    int z = -1;
    {
      int tail = tpath.back();
      int before = tpath.size() >= 2 ? tpath[tpath.size() - 2] : ch.u;
      for (int nb : g.neighbors(tail))
        if (nb != before && g.degree(nb) == 3) z = nb;
    }
    if (z < 0 || z == ch.u) throw InternalError("redirected chain lost its far attachment");
    Subgraph rest = induced_subgraph(g, all_but(n, tpath));
    auto comps_sub = components(rest.graph);
    if (comps_sub.size() != 2)
      throw InternalError("redirected chain split the graph in more than two");
    std::vector<int> c0, c1;
    for (int sv : comps_sub[0]) c0.push_back(rest.to_original[sv]);
    for (int sv : comps_sub[1]) c1.push_back(rest.to_original[sv]);
    std::sort(c0.begin(), c0.end());
    std::sort(c1.begin(), c1.end());
    bool u_in_0 = std::find(c0.begin(), c0.end(), ch.u) != c0.end();
    std::vector<int> comp_cycle = u_in_0 ? c0 : c1;
    std::vector<int> comp_z = u_in_0 ? c1 : c0;
    std::vector<int> walk_chain(tpath.rbegin(), tpath.rend());
    return chain_and_cycle(g, walk_chain, z, ch.u, comp_z, comp_cycle, xs, ctx);
  }

  // t has degree three: close the cycle at u as a walk, hand t the derived
  // column of u, and park the cycle high above the rest.
  std::vector<int> cyc{ch.u};
  cyc.insert(cyc.end(), ch.verts.begin(), ch.verts.end());
  std::vector<ExactCoord> cols;
  for (int v : ch.verts) cols.push_back(xs.at(v));
  Pts walk = closed_walk_points(cols);
  Pts cyc_pts(cyc.size());
  cyc_pts[0] = walk[cols.size()];
  for (size_t i = 0; i < cols.size(); ++i) cyc_pts[i + 1] = walk[i];
  ExactCoord x0 = cyc_pts[0].x;

  Subgraph rest = induced_subgraph(g, all_but(n, cyc));
  if (is_cycle_graph(rest.graph) || !is_connected(rest.graph))
    throw InternalError("closed chain left an unexpected remainder");
  XValues sub = part_values(rest.graph, rest, xs, {{t, x0}}, ctx);
  Pts rp = embed_piece(rest.graph, sub, ctx);
  Pts pts(n);
  place_back(pts, rest, rp);
  ExactCoord lift = stack_offset(rp, cyc_pts);
  for (size_t i = 0; i < cyc.size(); ++i)
    pts[cyc[i]] = translate(cyc_pts[i], ExactCoord{}, lift);
  return pts;
}

// ---------------------------------------------------------------------------
// Complete bipartite graph on 2 + 3 vertices: closed form.

Pts draw_k23(const Graph& g, const XValues& xs) {
  std::vector<int> hubs, rungs;
  for (int v = 0; v < g.vertex_count(); ++v)
    (g.degree(v) == 3 ? hubs : rungs).push_back(v);
  if (hubs.size() != 2 || rungs.size() != 3 || g.has_edge(hubs[0], hubs[1]))
    throw InternalError("unexpected shape for the bipartite special case");
  for (int r : rungs)
    if (!g.has_edge(r, hubs[0]) || !g.has_edge(r, hubs[1]))
      throw InternalError("unexpected shape for the bipartite special case");
  std::vector<int> by_col = rungs;
  std::sort(by_col.begin(), by_col.end(), [&](int p, int q) {
    return xs.at(p).compare(xs.at(q)) < 0;
  });
  ExactCoord a = xs.at(by_col[0]), b = xs.at(by_col[1]), c = xs.at(by_col[2]);
  Pts pts(5);
  pts[hubs[0]] = Point{c, ExactCoord{}};
  pts[hubs[1]] = Point{a, b - a};
  pts[by_col[2]] = Point{c, b + c - a - a};
  pts[by_col[0]] = Point{a, c - a};
  pts[by_col[1]] = Point{b, ExactCoord{}};
  return pts;
}

// ---------------------------------------------------------------------------
// General position: a shortest cycle through a degree-two vertex, cut out
// and rebuilt as a staircase riding on rays over the rest of the drawing.

struct RingPlan {
  std::vector<int> cyc;  // v, u1, u2, ..., uk in cyclic order
  bool deep;             // the anchor under u1 is a prescribed low vertex
  int anchor;            // third neighbor of u1
  int anchor2 = -1;      // the anchor's outside neighbor when deep
};

std::optional<RingPlan> plan_ring(const Graph& g, const std::vector<int>& cycle0,
                                  int v_first) {
  // Both rotations of the cycle putting v first; successor becomes u1.
  std::vector<int> fwd = rotate_cycle_to(cycle0, v_first);
  std::vector<int> bwd(fwd.begin() + 1, fwd.end());
  std::reverse(bwd.begin(), bwd.end());
  bwd.insert(bwd.begin(), v_first);
  std::optional<RingPlan> fallback;
  for (const auto& cyc : {fwd, bwd}) {
    int u1 = cyc[1];
    if (g.degree(u1) != 3) continue;
    int anchor = -1;
    for (int nb : g.neighbors(u1))
      if (nb != cyc[0] && nb != cyc[2]) anchor = nb;
    if (anchor < 0 || std::find(cyc.begin(), cyc.end(), anchor) != cyc.end()) continue;
    RingPlan plan;
    plan.cyc = cyc;
    plan.anchor = anchor;
    plan.deep = g.degree(anchor) == 2;
    std::vector<int> removed = cyc;
    if (plan.deep) {
      int a2 = -1;
      for (int nb : g.neighbors(anchor))
        if (nb != u1) a2 = nb;
      if (std::find(cyc.begin(), cyc.end(), a2) != cyc.end()) continue;
      plan.anchor2 = a2;
      removed.push_back(anchor);
    }
    std::vector<bool> gone(g.vertex_count(), false);
    for (int q : removed) gone[q] = true;
    bool ok = true;
    for (int q = 0; q < g.vertex_count() && ok; ++q) {
      if (gone[q]) continue;
      int lost = 0;
      for (int nb : g.neighbors(q))
        if (gone[nb]) ++lost;
      if (lost >= 3) ok = false;
      if (lost == 2 && g.degree(q) == 2) ok = false;
    }
    if (!ok) continue;
    if (!plan.deep) return plan;
    if (!fallback) fallback = plan;
  }
  return fallback;
}

struct Ray {
  bool vertical = true;
  ExactCoord col;   // vertical rays ride a fixed column
  Point anchor;     // slanted rays climb Northwest from here
  int edge_to = -1; // vertex the rider connects down to, if any

  ExactCoord x_at(const ExactCoord& y) const {
    return vertical ? col : anchor.x - (y - anchor.y);
  }
};

Pts draw_around_ring(const Graph& g, const XValues& xs, Ctx& ctx) {
  const int n = g.vertex_count();
  // Shortest cycle through any degree-two vertex, candidates in id order.
  int best_len = -1;
  std::vector<std::pair<int, std::vector<int>>> cycles;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 2) continue;
    auto c = shortest_cycle_through(g, v);
    if (!c) continue;
    cycles.push_back({v, *c});
    if (best_len < 0 || static_cast<int>(c->size()) < best_len)
      best_len = static_cast<int>(c->size());
  }
  std::optional<RingPlan> plan;
  for (const auto& [v, cyc] : cycles) {
    if (static_cast<int>(cyc.size()) != best_len) continue;
    std::vector<int> cands;
    for (int cand : cyc)
      if (g.degree(cand) == 2) cands.push_back(cand);
    std::sort(cands.begin(), cands.end());
    for (int cand : cands) {
      auto p = plan_ring(g, cyc, cand);
      if (p && !p->deep) { plan = p; break; }
      if (p && !plan) plan = p;
    }
    if (plan && !plan->deep) break;
  }
  if (!plan) {
    if (n == 5) return draw_k23(g, xs);
    throw InternalError("no ring orientation admitted the staircase");
  }

  const auto& cyc = plan->cyc;
  const int k = static_cast<int>(cyc.size()) - 1;
  const int v0 = cyc[0], u1 = cyc[1];
  ExactCoord x1 = xs.at(v0);

  std::vector<int> removed = cyc;
  if (plan->deep) removed.push_back(plan->anchor);
  Subgraph rest = induced_subgraph(g, all_but(n, removed));

  std::map<int, ExactCoord> over;
  if (plan->deep)
    over.emplace(plan->anchor2, xs.at(plan->anchor));
  else
    over.emplace(plan->anchor, x1);

  Pts pts(n);
  Pts rest_world;
  auto comps_sub = components(rest.graph);
  {
    Pts merged;
    bool first_comp = true;
    for (const auto& comp : comps_sub) {
      Subgraph inner = induced_subgraph(rest.graph, comp);
      Subgraph full = compose(rest, inner);
      XValues sub = part_values(full.graph, full, xs, over, ctx);
      Pts cp = embed_piece(full.graph, sub, ctx);
      if (!first_comp) {
        ExactCoord lift = stack_offset(merged, cp);
        for (auto& p : cp) p = translate(p, ExactCoord{}, lift);
      }
      merged.insert(merged.end(), cp.begin(), cp.end());
      first_comp = false;
      place_back(pts, full, cp);
    }
    rest_world = merged;
  }

  // Rays the staircase rides: own column for prescribed ring vertices, the
  // outside neighbor's column or Northwest diagonal otherwise.
  // One vertical is spoken for from the start: u1 hangs over the anchor,
  // or, when the anchor is itself a prescribed low vertex, the anchor
  // hangs over its outside neighbor. A later rider on the same base takes
  // the diagonal.
  std::map<int, int> visits;
  visits[plan->deep ? plan->anchor2 : plan->anchor] = 1;
  std::vector<Ray> rays(k + 1);
  for (int i = 2; i <= k; ++i) {
    Ray r;
    if (g.degree(cyc[i]) == 2) {
      r.vertical = true;
      r.col = xs.at(cyc[i]);
    } else {
      int z = -1;
      for (int nb : g.neighbors(cyc[i]))
        if (nb != cyc[i - 1] && nb != cyc[(i + 1) % (k + 1)]) z = nb;
      if (z < 0) throw InternalError("ring vertex lost its outside neighbor");
      int lost = 0;
      for (int nb : g.neighbors(z))
        if (std::find(removed.begin(), removed.end(), nb) != removed.end()) ++lost;
      bool slanted;
      if (lost >= 2) {
        slanted = visits[z] > 0;  // first rider drops a vertical, second a diagonal
        visits[z] += 1;
      } else {
        slanted = g.degree(z) == 2;
      }
      r.vertical = !slanted;
      r.col = pts[z].x;
      r.anchor = pts[z];
      r.edge_to = z;
    }
    rays[i] = r;
  }

  // Height above which the left-to-right order of all rays is frozen.
  ExactCoord top = max_y(rest_world);
  for (int i = 2; i <= k; ++i) {
    for (int j = 2; j <= k; ++j) {
      if (i == j || !rays[i].vertical || rays[j].vertical) continue;
      top = ec_max(top, rays[j].anchor.y + (rays[j].anchor.x - rays[i].col));
    }
    if (!rays[i].vertical) top = ec_max(top, rays[i].anchor.y);
  }
  const long y0 = integer_above(top);

  ExactCoord anchor_col = plan->deep ? xs.at(plan->anchor) : x1;
  long level = 1;
  for (int round = 0; round < 64; ++round, level *= 2) {
    bool stuck = false;
    if (plan->deep) pts[plan->anchor] = Point{anchor_col, ec(y0 + level)};
    Point first{anchor_col, ec(y0 + level)};
    if (plan->deep) {
      ExactCoord dx = x1 - anchor_col;
      int s = dx.sign();
      if (s == 0) stuck = true;
      first = s > 0 ? Point{x1, first.y + dx} : Point{x1, first.y};
    }
    pts[u1] = first;
    Point prev = first;
    for (int i = 2; i <= k && !stuck; ++i) {
      ExactCoord rx = rays[i].x_at(prev.y);
      int side = prev.x.compare(rx);
      if (side == 0) { stuck = true; break; }
      Point nxt;
      if (side < 0) {
        if (rays[i].vertical) {
          nxt = Point{rays[i].col, prev.y + (rays[i].col - prev.x)};
        } else {
          Rational half(1, 2);
          ExactCoord yy =
              (rays[i].anchor.x + rays[i].anchor.y + prev.y - prev.x) * half;
          nxt = Point{prev.x + (yy - prev.y), yy};
        }
      } else {
        nxt = Point{rx, prev.y};
      }
      pts[cyc[i]] = nxt;
      prev = nxt;
    }
    if (!stuck) {
      ExactCoord dx = x1 - prev.x;
      int s = dx.sign();
      if (s == 0) stuck = true;
      else
        pts[v0] = s > 0 ? Point{x1, prev.y + dx} : Point{x1, prev.y};
    }
    if (!stuck && pts[v0].y.compare(pts[u1].y) <= 0) stuck = true;
    if (!stuck && audit(g, pts, xs, allowed_indices(xs, ctx)).empty()) return pts;
  }
  throw InternalError("ring staircase found no clear level");
}

// ---------------------------------------------------------------------------
// Dispatch.

Pts embed_rec(const Graph& g, const XValues& xs, Ctx& ctx) {
  const int n = g.vertex_count();
  if (n <= 2) {
    Pts pts(n);
    for (const auto& [v, val] : xs) pts[v] = Point{val, ExactCoord{}};
    return pts;
  }
  bool low_only = true, pendant = false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 3) low_only = false;
    if (g.degree(v) == 1) pendant = true;
  }
  if (low_only) return draw_path_graph(g, xs);
  if (pendant) return draw_with_pendant_path(g, xs, ctx);
  if (auto th = find_theta(g)) return draw_with_theta(g, *th, xs, ctx);
  bool on_cycle = false;
  for (int v = 0; v < n && !on_cycle; ++v)
    if (g.degree(v) == 2 && shortest_cycle_through(g, v)) on_cycle = true;
  if (!on_cycle) return draw_bridge_split(g, xs, ctx);
  for (const auto& [u, v] : g.edges())
    if (g.degree(u) == 2 && g.degree(v) == 2) return draw_with_chain(g, xs, ctx);
  return draw_around_ring(g, xs, ctx);
}

void check_values(const Graph& g, const XValues& xs) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    bool low = g.degree(v) <= 2;
    if (low && !xs.count(v))
      throw PreconditionViolation("vertex " + std::to_string(v) + " needs a column");
    if (!low && xs.count(v))
      throw PreconditionViolation("vertex " + std::to_string(v) +
                                  " has degree three and cannot take a column");
  }
  for (const auto& [v, val] : xs) {
    if (val.is_rational())
      throw PreconditionViolation("column of vertex " + std::to_string(v) +
                                  " must be irrational");
    for (const auto& [w, other] : xs)
      if (w < v && other == val)
        throw PreconditionViolation("columns of vertices " + std::to_string(w) + " and " +
                                    std::to_string(v) + " coincide");
  }
}

XValues values_of(const XAssignment& xa) {
  XValues out;
  std::set<int> used;
  for (const auto& [v, idx] : xa.basis_of) {
    if (idx <= 0) throw PreconditionViolation("basis indices must be positive");
    if (!used.insert(idx).second)
      throw PreconditionViolation("basis index " + std::to_string(idx) + " used twice");
    out.emplace(v, ExactCoord::basis(idx));
  }
  return out;
}

}  // namespace

XAssignment default_assignment(const Graph& g) {
  XAssignment xa;
  int next = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) <= 2) xa.basis_of[v] = next++;
  return xa;
}

Drawing embed_cycle(const std::vector<int>& cycle, const XAssignment& xs, int exceptional) {
  const int n = static_cast<int>(cycle.size());
  if (n < 3) throw PreconditionViolation("a cycle needs at least three vertices");
  std::vector<bool> seen(n, false);
  for (int v : cycle) {
    if (v < 0 || v >= n || seen[v])
      throw PreconditionViolation("cycle must list every vertex exactly once");
    seen[v] = true;
  }
  if (exceptional < 0 || exceptional >= n)
    throw PreconditionViolation("exceptional vertex out of range");
  XValues vals = values_of(xs);
  if (vals.count(exceptional))
    throw PreconditionViolation("the exceptional vertex cannot take a column");
  if (static_cast<int>(vals.size()) != n - 1)
    throw PreconditionViolation("every other vertex needs a column");

  std::vector<int> order = rotate_cycle_to(cycle, exceptional);
  std::vector<ExactCoord> cols;
  for (int i = 1; i < n; ++i) cols.push_back(vals.at(order[i]));
  Pts walk = closed_walk_points(cols);
  Pts pts(n);
  pts[order[0]] = walk[n - 1];
  for (int i = 1; i < n; ++i) pts[order[i]] = walk[i - 1];

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({cycle[i], cycle[(i + 1) % n]});
  Graph g = Graph::from_edges(n, edges);
  Ctx ctx{Minter(first_free_index(vals))};
  enforce(g, pts, vals, ctx, "closed walk");
  return Drawing{Drawing::Mode::Basic, pts, basic_slope_set()};
}

Drawing embed_two_cycles_with_edge(const std::vector<int>& c1, const std::vector<int>& c2,
                                   const XAssignment& xs) {
  if (c1.size() < 3 || c2.size() < 3)
    throw PreconditionViolation("each cycle needs at least three vertices");
  const int n = static_cast<int>(c1.size() + c2.size());
  std::vector<bool> seen(n, false);
  for (const auto* c : {&c1, &c2})
    for (int v : *c) {
      if (v < 0 || v >= n || seen[v])
        throw PreconditionViolation("cycles must cover every vertex exactly once");
      seen[v] = true;
    }
  XValues vals = values_of(xs);
  if (vals.count(c1.front()) || vals.count(c2.front()))
    throw PreconditionViolation("joint vertices cannot take columns");
  if (static_cast<int>(vals.size()) != n - 2)
    throw PreconditionViolation("every non-joint vertex needs a column");

  std::vector<std::pair<int, int>> edges;
  for (const auto* c : {&c1, &c2})
    for (size_t i = 0; i < c->size(); ++i)
      edges.push_back({(*c)[i], (*c)[(i + 1) % c->size()]});
  edges.push_back({c1.front(), c2.front()});
  Graph g = Graph::from_edges(n, edges);
  Pts pts = draw_two_joined(g, vals);
  Ctx ctx{Minter(first_free_index(vals))};
  enforce(g, pts, vals, ctx, "joined cycles");
  return Drawing{Drawing::Mode::Basic, pts, basic_slope_set()};
}

EmbedResult embed_subcubic(const Graph& g, const XAssignment& xs) {
  XValues vals = values_of(xs);
  for (const auto& [v, idx] : xs.basis_of)
    if (v < 0 || v >= g.vertex_count())
      throw PreconditionViolation("assignment names a vertex outside the graph");
  return embed_subcubic_values(g, vals);
}

EmbedResult embed_subcubic_values(const Graph& g, const XValues& xs) {
  if (!is_connected(g)) throw PreconditionViolation("graph must be connected");
  if (is_cycle_graph(g))
    throw PreconditionViolation("cycles need the closed-walk entry point");
  if (is_two_cycles_joined_by_edge(g))
    throw PreconditionViolation("two joined cycles need their dedicated entry point");
  bool has_low = false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) <= 2) has_low = true;
  if (!has_low)
    throw PreconditionViolation("graph needs a vertex of degree below three");
  check_values(g, xs);

  Ctx ctx{Minter(first_free_index(xs))};
  Pts pts = embed_rec(g, xs, ctx);
  enforce(g, pts, xs, ctx, "final assembly");
  return EmbedResult{Drawing{Drawing::Mode::Basic, pts, basic_slope_set()},
                     ctx.mint.minted()};
}

std::vector<std::string> check_embedding_properties(const Graph& g, const Drawing& d,
                                                    const XValues& prescribed,
                                                    const std::vector<int>& minted) {
  std::vector<std::string> issues;
  if (d.mode != Drawing::Mode::Basic) issues.push_back("drawing must use the basic slope set");
  if (static_cast<int>(d.positions.size()) != g.vertex_count()) {
    issues.push_back("drawing size does not match the graph");
    return issues;
  }
  std::set<int> allowed{0};
  for (const auto& [v, val] : prescribed)
    for (int i : val.support()) allowed.insert(i);
  for (int i : minted) allowed.insert(i);
  auto more = audit(g, d.positions, prescribed, allowed);
  issues.insert(issues.end(), more.begin(), more.end());
  return issues;
}

}  // namespace slopes
