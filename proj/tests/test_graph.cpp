#include <doctest.h>

#include <algorithm>
#include <set>

#include "slopes/errors.hpp"
#include "slopes/graph.hpp"
#include "slopes/graph_algos.hpp"
#include "test_graphs.hpp"

using namespace slopes;
using namespace slopes::testing;

TEST_CASE("edge ids are stable under input order") {
  Graph a = from_pairs(4, {{2, 3}, {0, 1}, {3, 1}, {2, 0}});
  Graph b = from_pairs(4, {{0, 2}, {1, 3}, {0, 1}, {2, 3}});
  CHECK(a == b);
  CHECK(a.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(a.edge(0) == std::pair{0, 1});
  CHECK(a.edge_id(3, 1) == 2);
  CHECK(a.edge_id(0, 3) == std::nullopt);
  CHECK(a.other_end(2, 1) == 3);
  CHECK(a.other_end(2, 3) == 1);
  CHECK(a.has_edge(1, 0));
  CHECK_FALSE(a.has_edge(0, 3));
}

TEST_CASE("adjacency comes back sorted") {
  Graph g = petersen();
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
    CHECK(std::is_sorted(g.incident_edges(v).begin(), g.incident_edges(v).end()));
    CHECK(g.degree(v) == 3);
  }
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 15);
}

TEST_CASE("from_edges validates its input") {
  CHECK_THROWS_AS(from_pairs(3, {{0, 3}}), ParseError);
  CHECK_THROWS_AS(from_pairs(3, {{-1, 0}}), ParseError);
  CHECK_THROWS_AS(from_pairs(3, {{1, 1}}), ParseError);
  CHECK_THROWS_AS(from_pairs(3, {{0, 1}, {1, 0}}), ParseError);
  // Degree four: a star on five vertices.
  CHECK_THROWS_AS(from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), DegreeViolation);
  CHECK_NOTHROW(from_pairs(1, {}));
}

TEST_CASE("induced subgraphs relabel consistently") {
  Graph g = prism();
  Subgraph s = induced_subgraph(g, {0, 1, 2, 4});
  CHECK(s.graph.vertex_count() == 4);
  CHECK(s.to_original == std::vector<int>{0, 1, 2, 4});
  CHECK(s.to_sub[4] == 3);
  CHECK(s.to_sub[3] == -1);
  // Triangle 0-1-2 survives; 4 keeps only its edge to 1.
  CHECK(s.graph.edge_count() == 4);
  CHECK(s.graph.has_edge(s.to_sub[0], s.to_sub[1]));
  CHECK(s.graph.has_edge(s.to_sub[1], s.to_sub[4]));
  CHECK_FALSE(s.graph.has_edge(s.to_sub[0], s.to_sub[4]));
}

TEST_CASE("components and connectivity") {
  CHECK(is_connected(petersen()));
  CHECK_FALSE(is_connected(from_pairs(4, {{0, 1}, {2, 3}})));
  auto comps = components(from_pairs(5, {{0, 1}, {2, 3}}));
  CHECK(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3});
  CHECK(comps[2] == std::vector<int>{4});
  CHECK(components(Graph::from_edges(0, {})).empty());
}

TEST_CASE("cycle graphs and cycle order") {
  CHECK(is_cycle_graph(cycle(5)));
  CHECK_FALSE(is_cycle_graph(path(5)));
  CHECK_FALSE(is_cycle_graph(petersen()));
  CHECK_FALSE(is_cycle_graph(from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK(cycle_order(cycle(4)) == std::vector<int>{0, 1, 2, 3});
  // Scrambled labels: order still starts at the smallest vertex and walks
  // toward its smaller neighbor.
  Graph c = from_pairs(4, {{2, 1}, {1, 3}, {3, 0}, {0, 2}});
  CHECK(cycle_order(c) == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("girth cycles") {
  CHECK(girth_cycle(petersen())->size() == 5);
  CHECK(girth_cycle(heawood())->size() == 6);
  CHECK(girth_cycle(tietze())->size() == 3);
  CHECK(girth_cycle(path(4)) == std::nullopt);
  auto through = shortest_cycle_through(petersen(), 7);
  REQUIRE(through.has_value());
  CHECK(through->size() == 5);
  CHECK(std::count(through->begin(), through->end(), 7) == 1);
  CHECK(shortest_cycle_through(path(4), 2) == std::nullopt);
}

TEST_CASE("supercycles") {
  Supercycle sc = find_supercycle(petersen());
  CHECK(verify_supercycle(petersen(), sc));
  CHECK(std::is_sorted(sc.vertices.begin(), sc.vertices.end()));
  CHECK(std::is_sorted(sc.edges.begin(), sc.edges.end()));

  CHECK_THROWS_AS(find_supercycle(path(4)), PreconditionViolation);
  CHECK_THROWS_AS(find_supercycle(from_pairs(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                                 {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}})),
                  PreconditionViolation);

  // A plain cycle is not a supercycle, so cycles yield nothing.
  CHECK(find_supercycle_any(cycle(6)) == std::nullopt);
  CHECK(find_supercycle_any(path(6)) == std::nullopt);
  auto k4sc = find_supercycle_any(k4());
  REQUIRE(k4sc.has_value());
  CHECK(verify_supercycle(k4(), *k4sc));

  // verify_supercycle rejects a plain cycle passed off as a supercycle.
  Supercycle fake;
  fake.vertices = {0, 1, 2, 3, 4, 5};
  for (int e = 0; e < 6; ++e) fake.edges.push_back(e);
  CHECK_FALSE(verify_supercycle(cycle(6), fake));
}

TEST_CASE("matchings") {
  auto mm = maximum_matching(petersen());
  CHECK(mm.size() == 5);
  auto pm = perfect_matching(petersen());
  CHECK(pm.size() == 5);
  std::set<int> covered;
  for (int e : pm) {
    auto [u, v] = petersen().edge(e);
    covered.insert(u);
    covered.insert(v);
  }
  CHECK(covered.size() == 10);

  CHECK(perfect_matching(heawood()).size() == 7);
  CHECK_THROWS_AS(perfect_matching(cycle(3)), NoPerfectMatching);
  // Odd component count after deleting the center: no perfect matching,
  // and the maximum matching covers eight of the ten vertices.
  Graph star = three_triangle_star();
  CHECK(maximum_matching(star).size() == 4);
  CHECK_THROWS_AS(perfect_matching(star), NoPerfectMatching);
  // Blossom territory: odd cycles force contractions.
  CHECK(maximum_matching(cycle(7)).size() == 3);
  CHECK(maximum_matching(tietze()).size() == 6);
}

TEST_CASE("bridges and small cuts") {
  Graph bridged = cubic_with_bridge();
  auto bridges = bridge_edges(bridged);
  REQUIRE(bridges.size() == 1);
  CHECK(bridged.edge(bridges[0]) == std::pair{4, 9});
  CHECK(bridge_edges(petersen()).empty());
  // Every edge of a tree is a bridge.
  CHECK(bridge_edges(path(5)).size() == 4);

  Graph two_cut = cubic_with_two_edge_cut();
  CHECK(bridge_edges(two_cut).empty());
  auto cut = find_two_edge_cut(two_cut);
  REQUIRE(cut.has_value());
  std::set<std::pair<int, int>> cut_pairs = {two_cut.edge(cut->first), two_cut.edge(cut->second)};
  CHECK(cut_pairs == std::set<std::pair<int, int>>{{0, 7}, {3, 4}});
  CHECK(find_two_edge_cut(petersen()) == std::nullopt);

  CutReport rep = find_bridges_and_small_cuts(bridged);
  CHECK(rep.bridges == bridges);
  // The subdivision vertices sit behind two-edge cuts: {2-4, 3-4} and
  // {7-9, 8-9}.
  CHECK(rep.two_edge_cuts.size() == 2);
  std::set<int> cut_vs(rep.cut_vertices.begin(), rep.cut_vertices.end());
  CHECK(cut_vs == std::set<int>{4, 9});

  CutReport rep2 = find_bridges_and_small_cuts(two_cut);
  CHECK(rep2.bridges.empty());
  CHECK(rep2.two_edge_cuts.size() == 1);
  CHECK(rep2.cut_vertices.empty());

  CutReport rep3 = find_bridges_and_small_cuts(petersen());
  CHECK(rep3.bridges.empty());
  CHECK(rep3.two_edge_cuts.empty());
  CHECK(rep3.cut_vertices.empty());
  CHECK(rep3.two_vertex_cuts.empty());
}

TEST_CASE("triangle detection and contraction") {
  CHECK(find_triangle(petersen()) == std::nullopt);
  CHECK(find_triangle(heawood()) == std::nullopt);
  auto tri = find_triangle(tietze());
  REQUIRE(tri.has_value());
  CHECK(tietze().has_edge((*tri)[0], (*tri)[1]));
  CHECK(tietze().has_edge((*tri)[1], (*tri)[2]));
  CHECK(tietze().has_edge((*tri)[0], (*tri)[2]));

  // Contracting a prism triangle gives K4.
  TriangleContraction rec = contract_triangle(prism());
  CHECK(rec.contracted.vertex_count() == 4);
  CHECK(rec.contracted.edge_count() == 6);
  CHECK(find_isomorphism(rec.contracted, k4()).has_value());
  CHECK(expand_contraction(rec) == prism());
  // The merged vertex reuses the smallest triangle slot.
  CHECK(rec.merged_vertex == rec.to_contracted[rec.triangle[0]]);
  for (int i = 0; i < 3; ++i) {
    auto [u, v] = prism().edge(rec.boundary_edges[i]);
    CHECK(((u == rec.triangle[i] && v == rec.outside[i]) ||
           (v == rec.triangle[i] && u == rec.outside[i])));
  }

  // K4's triangles all share their outside neighbor structure.
  CHECK_THROWS_AS(contract_triangle(k4()), NonDisjointBoundary);
  CHECK_THROWS_AS(contract_triangle(petersen()), NoTriangle);
  CHECK_THROWS_AS(contract_triangle(prism(), {0, 1, 4}), NoTriangle);

  // Tietze contracts back to the Petersen graph.
  TriangleContraction trec = contract_triangle(tietze());
  CHECK(find_isomorphism(trec.contracted, petersen()).has_value());
  CHECK(expand_contraction(trec) == tietze());
}

TEST_CASE("two cycles joined by an edge") {
  Graph joined = from_pairs(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}, {0, 3}});
  std::pair<int, int> join;
  CHECK(is_two_cycles_joined_by_edge(joined, &join));
  CHECK(join == std::pair{0, 3});
  CHECK_FALSE(is_two_cycles_joined_by_edge(cycle(6)));
  CHECK_FALSE(is_two_cycles_joined_by_edge(k4()));
  CHECK_FALSE(is_two_cycles_joined_by_edge(path(5)));
  // Two cycles sharing a vertex rather than an edge do not count.
  Graph shared = from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK_FALSE(is_two_cycles_joined_by_edge(shared));
}

TEST_CASE("isomorphism") {
  // Relabel the Petersen graph by v -> (3v + 2) mod 10.
  std::vector<std::pair<int, int>> relabeled;
  for (auto [u, v] : petersen().edges())
    relabeled.push_back({(3 * u + 2) % 10, (3 * v + 2) % 10});
  Graph q = from_pairs(10, std::move(relabeled));
  auto iso = find_isomorphism(petersen(), q);
  REQUIRE(iso.has_value());
  for (auto [u, v] : petersen().edges()) CHECK(q.has_edge((*iso)[u], (*iso)[v]));

  // The Wagner graph is cubic on eight vertices like the cube, but has odd
  // cycles, so no isomorphism exists.
  Graph wagner = circulant(8, {1, 4});
  CHECK(find_isomorphism(cube(), wagner) == std::nullopt);
  CHECK(find_isomorphism(cube(), petersen()) == std::nullopt);
  CHECK(find_isomorphism(cube(), cube()).has_value());
}
