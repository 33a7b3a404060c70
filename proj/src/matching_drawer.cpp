#include "slopes/matching_drawer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slopes/errors.hpp"
#include "slopes/graph_algos.hpp"
#include "slopes/placement.hpp"
#include "slopes/verifier.hpp"

namespace slopes {

namespace {

// One pass of a cycle over a matching edge: the vertex at position `pos` of
// cycle `cycle` sits on that edge. Every matching edge has exactly two
// passes in total.
struct Pass {
  int cycle = -1;
  int pos = -1;

  bool operator==(const Pass& o) const {
    return cycle == o.cycle && pos == o.pos;
  }
};

using PassTable = std::map<int, std::vector<Pass>>;

PassTable pass_table(const CycleSystem& cs) {
  PassTable passes;
  for (int ci = 0; ci < static_cast<int>(cs.cycles.size()); ++ci) {
    const auto& verts = cs.cycles[ci];
    for (int j = 0; j < static_cast<int>(verts.size()); ++j)
      passes[cs.matching_edge_of[verts[j]]].push_back({ci, j});
  }
  for (const auto& [edge, list] : passes)
    if (list.size() != 2)
      throw InternalError("matching edge " + std::to_string(edge) + " has " +
                          std::to_string(list.size()) +
                          " cycle passes instead of two");
  return passes;
}

Pass other_pass(const PassTable& passes, int edge, const Pass& mine) {
  const auto& list = passes.at(edge);
  return list[0] == mine ? list[1] : list[0];
}

Point rational_point(const Rational& x, const Rational& y) {
  return {ExactCoord::from_rational(x), ExactCoord::from_rational(y)};
}

}  // namespace

std::vector<int> matching_sequence(const CycleSystem& cs, int cycle) {
  if (cycle < 0 || cycle >= static_cast<int>(cs.cycles.size()))
    throw PreconditionViolation("cycle index " + std::to_string(cycle) +
                                " out of range");
  std::vector<int> seq;
  seq.reserve(cs.cycles[cycle].size());
  for (int v : cs.cycles[cycle]) seq.push_back(cs.matching_edge_of[v]);
  return seq;
}

std::pair<int, int> distinguished_pair(const CycleSystem& cs, int cycle) {
  if (cycle < 0 || cycle >= static_cast<int>(cs.cycles.size()))
    throw PreconditionViolation("cycle index " + std::to_string(cycle) +
                                " out of range");
  if (cs.distinguished.size() != cs.cycles.size())
    throw PreconditionViolation("no distinguished edges have been selected");
  const auto& verts = cs.cycles[cycle];
  const int k = static_cast<int>(verts.size());
  const int p = cs.distinguished[cycle];
  if (p < 0 || p >= k)
    throw PreconditionViolation("cycle " + std::to_string(cycle) +
                                " has no distinguished edge");
  const int a = cs.matching_edge_of[verts[p]];
  const int b = cs.matching_edge_of[verts[(p + 1) % k]];
  return {std::min(a, b), std::max(a, b)};
}

CycleSystem decompose_cycles(const Graph& g, const std::vector<int>& matching) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 3)
      throw PreconditionViolation(
          "vertex " + std::to_string(v) + " has degree " +
          std::to_string(g.degree(v)) +
          ", the vertical-line decomposition needs a cubic graph");

  std::vector<int> partner(n, -1);
  std::vector<int> edge_of(n, -1);
  for (int id : matching) {
    if (id < 0 || id >= g.edge_count())
      throw PreconditionViolation("matching refers to missing edge " +
                                  std::to_string(id));
    const auto& [a, b] = g.edge(id);
    if (partner[a] != -1 || partner[b] != -1)
      throw PreconditionViolation("matching edges share vertex " +
                                  std::to_string(partner[a] != -1 ? a : b));
    partner[a] = b;
    partner[b] = a;
    edge_of[a] = edge_of[b] = id;
  }
  for (int v = 0; v < n; ++v)
    if (partner[v] == -1)
      throw PreconditionViolation("vertex " + std::to_string(v) +
                                  " is missed by the matching");

  if (auto tri = find_triangle(g))
    throw TriangleFound("triangle " + std::to_string((*tri)[0]) + "-" +
                        std::to_string((*tri)[1]) + "-" +
                        std::to_string((*tri)[2]) +
                        "; contract triangles before decomposing");

  CycleSystem cs;
  cs.graph = g;
  cs.matching = matching;
  std::sort(cs.matching.begin(), cs.matching.end());
  cs.cycle_of.assign(n, -1);
  cs.matching_edge_of = edge_of;

  for (int v0 = 0; v0 < n; ++v0) {
    if (cs.cycle_of[v0] != -1) continue;
    std::vector<int> cyc;
    int prev = -1;
    int cur = v0;
    while (true) {
      cyc.push_back(cur);
      cs.cycle_of[cur] = static_cast<int>(cs.cycles.size());
      int next = -1;
      for (int w : g.neighbors(cur)) {
        if (w == partner[cur] || w == prev) continue;
        next = w;
        break;
      }
      if (next == v0) break;
      prev = cur;
      cur = next;
    }
    if (cyc.size() < 4)
      throw InternalError("cycle of length " + std::to_string(cyc.size()) +
                          " in a triangle-free decomposition");
    cs.cycles.push_back(std::move(cyc));
  }
  return cs;
}

CycleSystem select_distinguished_edges(const CycleSystem& cs0) {
  CycleSystem cs = cs0;
  const int m = static_cast<int>(cs.cycles.size());
  cs.distinguished.assign(m, -1);
  if (m == 0) return cs;
  if (!is_connected(cs.graph))
    throw PreconditionViolation(
        "the chained selection needs a connected graph");

  const auto passes = pass_table(cs);
  std::vector<std::vector<int>> seq(m);
  for (int i = 0; i < m; ++i) seq[i] = matching_sequence(cs, i);
  std::vector<char> visited(m, 0);

  // One direction of the chain. Enter the cycle holding `cur`, distinguish
  // one of the two edges flanking that pass (successor first, predecessor
  // when the far flank would close the chain into a loop at `forbidden`),
  // then continue through the far flank's other pass. Stops at any cycle
  // already holding a distinguished edge.
  auto walk = [&](Pass cur, int forbidden) {
    while (!visited[cur.cycle]) {
      const int ci = cur.cycle;
      const int k = static_cast<int>(seq[ci].size());
      const int succ = (cur.pos + 1) % k;
      const int pred = (cur.pos - 1 + k) % k;
      int edge_index;
      int far_pos;
      if (seq[ci][succ] != forbidden) {
        edge_index = cur.pos;
        far_pos = succ;
      } else if (seq[ci][pred] != forbidden) {
        edge_index = pred;
        far_pos = pred;
      } else {
        throw InternalError("both flanking choices return to the start flank");
      }
      cs.distinguished[ci] = edge_index;
      visited[ci] = 1;
      cur = other_pass(passes, seq[ci][far_pos], {ci, far_pos});
    }
  };

  for (int start = 0; start < m; ++start) {
    if (visited[start]) continue;
    const auto& s = seq[start];
    const int k = static_cast<int>(s.size());

    // First cycle edge with a flank whose other pass leaves this cycle; by
    // the lower flank id when both do.
    int pick = -1;
    int shared_pos = -1;
    for (int j = 0; j < k && pick < 0; ++j) {
      const int pa = j;
      const int pb = (j + 1) % k;
      const bool a_out = other_pass(passes, s[pa], {start, pa}).cycle != start;
      const bool b_out = other_pass(passes, s[pb], {start, pb}).cycle != start;
      if (!a_out && !b_out) continue;
      pick = j;
      if (a_out && b_out)
        shared_pos = s[pa] < s[pb] ? pa : pb;
      else
        shared_pos = a_out ? pa : pb;
    }
    if (pick < 0) {
      // Every matching edge returns to this cycle, so the cycle spans the
      // whole connected graph and any edge will do.
      if (m != 1)
        throw InternalError("isolated cycle in a connected cubic graph");
      cs.distinguished[start] = 0;
      visited[start] = 1;
      continue;
    }

    cs.distinguished[start] = pick;
    visited[start] = 1;
    const int other_pos = shared_pos == pick ? (pick + 1) % k : pick;
    const int z_edge = s[other_pos];
    walk(other_pass(passes, s[shared_pos], {start, shared_pos}), z_edge);
    walk(other_pass(passes, z_edge, {start, other_pos}), -1);
  }

  auto issues = check_conditions(cs);
  if (!issues.empty())
    throw SelectionFailed(
        "distinguished-edge selection broke its own conditions: " +
        issues.front());
  return cs;
}

std::vector<std::string> check_conditions(const CycleSystem& cs) {
  std::vector<std::string> issues;
  const int m = static_cast<int>(cs.cycles.size());
  if (static_cast<int>(cs.distinguished.size()) != m) {
    issues.push_back("selection has not run");
    return issues;
  }
  for (int i = 0; i < m; ++i) {
    const int k = static_cast<int>(cs.cycles[i].size());
    if (cs.distinguished[i] < 0 || cs.distinguished[i] >= k) {
      issues.push_back("cycle " + std::to_string(i) +
                       " has no distinguished edge");
      return issues;
    }
  }

  std::vector<std::pair<int, int>> pairs(m);
  std::map<int, int> node;
  for (int i = 0; i < m; ++i) {
    pairs[i] = distinguished_pair(cs, i);
    if (pairs[i].first == pairs[i].second)
      issues.push_back("cycle " + std::to_string(i) +
                       " is flanked twice by matching edge " +
                       std::to_string(pairs[i].first));
    node.emplace(pairs[i].first, 0);
    node.emplace(pairs[i].second, 0);
  }
  int next_index = 0;
  for (auto& [edge, index] : node) index = next_index++;

  std::vector<int> degree(node.size(), 0);
  std::vector<int> parent(node.size());
  for (std::size_t i = 0; i < parent.size(); ++i)
    parent[i] = static_cast<int>(i);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  for (int i = 0; i < m; ++i) {
    const int a = node[pairs[i].first];
    const int b = node[pairs[i].second];
    ++degree[a];
    ++degree[b];
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb)
      issues.push_back("the flanking pairs close a loop at cycle " +
                       std::to_string(i));
    else
      parent[ra] = rb;
  }
  for (const auto& [edge, index] : node)
    if (degree[index] > 2)
      issues.push_back("matching edge " + std::to_string(edge) + " flanks " +
                       std::to_string(degree[index]) + " distinguished edges");

  // At most one cycle per chain component may live entirely on the
  // component's own lines.
  std::map<int, std::set<int>> members;
  for (const auto& [edge, index] : node) members[find(index)].insert(edge);
  std::map<int, int> swallowed;
  for (int i = 0; i < m; ++i) {
    const int root = find(node[pairs[i].first]);
    const auto& block = members[root];
    bool inside = true;
    for (int edge : matching_sequence(cs, i))
      if (!block.count(edge)) {
        inside = false;
        break;
      }
    if (inside && ++swallowed[root] > 1)
      issues.push_back(
          "a chain component holds two cycles entirely inside its own lines");
  }
  return issues;
}

LineLayout line_layout(const CycleSystem& cs) {
  auto issues = check_conditions(cs);
  if (!issues.empty())
    throw PreconditionViolation("line layout needs a valid selection: " +
                                issues.front());

  const int m = static_cast<int>(cs.cycles.size());
  std::map<int, std::vector<std::pair<int, int>>> chain;
  for (int i = 0; i < m; ++i) {
    auto [a, b] = distinguished_pair(cs, i);
    chain[a].push_back({b, i});
    chain[b].push_back({a, i});
  }

  LineLayout ll;
  std::set<int> used;
  for (const auto& [first_member, unused] : chain) {
    (void)unused;
    if (used.count(first_member)) continue;

    std::vector<int> comp;
    std::vector<int> stack{first_member};
    std::set<int> seen{first_member};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& [w, ci] : chain.at(v)) {
        (void)ci;
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    std::vector<int> ends;
    for (int v : comp)
      if (chain.at(v).size() == 1) ends.push_back(v);
    if (ends.size() != 2)
      throw InternalError("chain component is not a path");

    int cur = std::min(ends[0], ends[1]);
    int prev = -1;
    if (!ll.order.empty()) ll.gap_cycle.push_back(-1);
    ll.order.push_back(cur);
    used.insert(cur);
    while (true) {
      int next = -1;
      int via = -1;
      for (const auto& [w, ci] : chain.at(cur)) {
        if (w == prev) continue;
        next = w;
        via = ci;
        break;
      }
      if (next < 0) break;
      ll.gap_cycle.push_back(via);
      ll.order.push_back(next);
      used.insert(next);
      prev = cur;
      cur = next;
    }
  }

  for (int id : cs.matching) {
    if (used.count(id)) continue;
    if (!ll.order.empty()) ll.gap_cycle.push_back(-1);
    ll.order.push_back(id);
  }

  if (ll.order.size() != cs.matching.size())
    throw InternalError("line layout lost a matching edge");
  if (!ll.order.empty() && ll.gap_cycle.size() + 1 != ll.order.size())
    throw InternalError("line layout has a gap miscount");
  return ll;
}

LinearFormSystem build_linear_forms(const CycleSystem& cs) {
  const auto ll = line_layout(cs);
  const int m = static_cast<int>(cs.cycles.size());
  std::map<int, int> slot;
  for (int t = 0; t < static_cast<int>(ll.order.size()); ++t)
    slot[ll.order[t]] = t;

  LinearFormSystem sys;
  sys.n = m;
  sys.constant.assign(m, 0);
  sys.coeff.assign(m, std::vector<Rational>(m, 0));

  for (int i = 0; i < m; ++i) {
    const auto& verts = cs.cycles[i];
    const int k = static_cast<int>(verts.size());
    const int p = cs.distinguished[i];

    int sp = slot.at(cs.matching_edge_of[verts[p]]);
    int sq = slot.at(cs.matching_edge_of[verts[(p + 1) % k]]);
    if (sp > sq) std::swap(sp, sq);
    if (sq - sp != 1 || ll.gap_cycle[sp] != i)
      throw InternalError("distinguished edge of cycle " + std::to_string(i) +
                          " does not sit on its own gap");

    for (int e = 0; e < k; ++e) {
      if (e == p) continue;
      int s1 = slot.at(cs.matching_edge_of[verts[e]]);
      int s2 = slot.at(cs.matching_edge_of[verts[(e + 1) % k]]);
      if (s1 == s2)
        throw InternalError("cycle edge joins a line to itself");
      if (s1 > s2) std::swap(s1, s2);
      for (int t = s1; t < s2; ++t) {
        if (ll.gap_cycle[t] >= 0)
          sys.coeff[i][ll.gap_cycle[t]] += 1;
        else
          sys.constant[i] += 1;
      }
    }
  }

  const auto levels = r_levels(sys);
  for (int i = 0; i < m; ++i)
    if (levels[i] < 0) throw UnreachableNode(i + 1);
  return sys;
}

Drawing layout(const CycleSystem& cs, const SolverSolution& sol) {
  const auto ll = line_layout(cs);
  const int m = static_cast<int>(cs.cycles.size());
  if (static_cast<int>(sol.x.size()) != m)
    throw PreconditionViolation("solution has " + std::to_string(sol.x.size()) +
                                " gaps for " + std::to_string(m) + " cycles");
  for (const auto& x : sol.x)
    if (!(x > 0))
      throw PreconditionViolation("line gaps must be positive");
  if (!(sol.common_value > 1))
    throw PreconditionViolation(
        "the shared ratio must exceed one to keep the slope set distinct");

  std::vector<Rational> line_x(ll.order.size(), 0);
  for (std::size_t t = 0; t + 1 < line_x.size(); ++t) {
    const Rational gap =
        ll.gap_cycle[t] < 0 ? Rational(1) : sol.x[ll.gap_cycle[t]];
    line_x[t + 1] = Rational(line_x[t] + gap);
  }
  std::map<int, int> slot;
  for (int t = 0; t < static_cast<int>(ll.order.size()); ++t)
    slot[ll.order[t]] = t;

  Drawing d;
  d.mode = Drawing::Mode::Four;
  d.slopes = four_slope_set(sol.common_value);
  d.positions.assign(cs.graph.vertex_count(), Point{});

  Rational top = 0;
  for (int i = 0; i < m; ++i) {
    const auto& verts = cs.cycles[i];
    const int k = static_cast<int>(verts.size());
    const int p = cs.distinguished[i];
    const int sa = slot.at(cs.matching_edge_of[verts[p]]);
    const int sb = slot.at(cs.matching_edge_of[verts[(p + 1) % k]]);

    // Walk away from the distinguished edge, starting on its left line, so
    // the path rises from left to right across the distinguished gap.
    const int start = sb < sa ? (p + 1) % k : p;
    const int step = sb < sa ? 1 : k - 1;

    const Rational base =
        i == 0 ? Rational(0)
               : Rational(integer_above(ExactCoord::from_rational(top)));
    Rational y = base;
    int cur = start;
    int cur_slot = slot.at(cs.matching_edge_of[verts[cur]]);
    d.positions[verts[cur]] = rational_point(line_x[cur_slot], y);
    for (int t = 1; t < k; ++t) {
      const int nxt = (cur + step) % k;
      const int nxt_slot = slot.at(cs.matching_edge_of[verts[nxt]]);
      Rational rise = Rational(line_x[nxt_slot] - line_x[cur_slot]);
      if (rise < 0) rise = Rational(-rise);
      y += rise;
      d.positions[verts[nxt]] = rational_point(line_x[nxt_slot], y);
      cur = nxt;
      cur_slot = nxt_slot;
    }

    const Rational run =
        Rational(line_x[std::max(sa, sb)] - line_x[std::min(sa, sb)]);
    if (Rational(y - base) != Rational(sol.common_value * run))
      throw InternalError("cycle " + std::to_string(i) +
                          " closes at the wrong slope");
    top = y;
  }

  const auto report = verify_drawing(cs.graph, d);
  if (!report.ok())
    throw InternalError("vertical-line drawing failed verification: " +
                        report.issues.front());
  return d;
}

Drawing draw_cubic_four(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3)
      throw PreconditionViolation("vertex " + std::to_string(v) +
                                  " has degree " + std::to_string(g.degree(v)) +
                                  ", the ratio pipeline needs a cubic graph");
  if (g.vertex_count() == 0 || !is_connected(g))
    throw PreconditionViolation("the ratio pipeline needs a connected graph");

  const auto matching = perfect_matching(g);
  const auto cs = select_distinguished_edges(decompose_cycles(g, matching));
  const auto sys = build_linear_forms(cs);
  const auto sol = solve_equal_ratios(sys);
  return layout(cs, sol);
}

}  // namespace slopes
