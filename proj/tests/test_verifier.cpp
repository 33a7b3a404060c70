#include <doctest.h>

#include "slopes/cubic_drawer.hpp"
#include "slopes/errors.hpp"
#include "slopes/verifier.hpp"
#include "test_graphs.hpp"

using namespace slopes;
using namespace slopes::testing;

namespace {

Drawing basic_drawing(std::vector<Point> pts) {
  Drawing d;
  d.mode = Drawing::Mode::Basic;
  d.slopes = basic_slope_set();
  d.positions = std::move(pts);
  return d;
}

}  // namespace

TEST_CASE("slope sets") {
  auto basic = basic_slope_set();
  REQUIRE(basic.size() == 4);
  CHECK(basic[0] == Slope::of_tangent(0));
  CHECK(basic[1] == Slope::of_tangent(1));
  CHECK(basic[2] == Slope::vertical_slope());
  CHECK(basic[3] == Slope::of_tangent(-1));
  auto four = four_slope_set(Rational(7, 2));
  REQUIRE(four.size() == 4);
  CHECK(four[0] == Slope::vertical_slope());
  CHECK(four[1] == Slope::of_tangent(1));
  CHECK(four[2] == Slope::of_tangent(-1));
  CHECK(four[3] == Slope::of_tangent(Rational(7, 2)));
}

TEST_CASE("stock drawings satisfy the verifier") {
  for (const auto& f : figure_fixtures()) {
    auto rep = verify_drawing(f.graph, f.drawing);
    INFO(f.name << ": " << rep.summary());
    CHECK(rep.ok());
    CHECK(rep.summary() == "ok");
  }
}

TEST_CASE("verifier catches broken drawings") {
  Graph tri = cycle(3);

  // Wrong position count.
  auto short_d = basic_drawing({make_point(0, 0), make_point(1, 1)});
  CHECK_FALSE(verify_drawing(tri, short_d).ok());

  // Coincident vertices.
  auto coincide = basic_drawing({make_point(0, 0), make_point(0, 0), make_point(1, 1)});
  CHECK_FALSE(verify_drawing(tri, coincide).ok());

  // Slope outside the set: 0-1 runs at tangent 1/2.
  auto off = basic_drawing({make_point(0, 0), make_point(2, 1), make_point(2, 0)});
  auto rep = verify_drawing(tri, off);
  CHECK_FALSE(rep.ok());
  CHECK(rep.summary() != "ok");

  // A vertex in the open interior of an edge: path 0-1-2 drawn with 2
  // sitting inside edge 0-1. The slopes themselves are all fine.
  Graph p3 = path(3);
  auto overlap = basic_drawing({make_point(0, 0), make_point(4, 0), make_point(2, 0)});
  CHECK_FALSE(verify_drawing(p3, overlap).ok());

  // The same drawing with 2 moved off the segment passes.
  auto fine = basic_drawing({make_point(0, 0), make_point(4, 0), make_point(5, 1)});
  CHECK(verify_drawing(p3, fine).ok());

  // Crossings are explicitly allowed: two crossing diagonals verify.
  Graph two_edges = from_pairs(4, {{0, 1}, {2, 3}});
  auto crossing = basic_drawing(
      {make_point(0, 0), make_point(2, 2), make_point(0, 2), make_point(2, 0)});
  CHECK(verify_drawing(two_edges, crossing).ok());
}

TEST_CASE("verifier in ratio mode") {
  // Edge 0-1 at tangent 3, the rest vertical and diagonal.
  Graph p4 = path(4);
  Drawing d;
  d.mode = Drawing::Mode::Four;
  d.slopes = four_slope_set(3);
  d.positions = {make_point(0, 0), make_point(1, 3), make_point(1, 5), make_point(2, 4)};
  CHECK(verify_drawing(p4, d).ok());
  d.slopes = four_slope_set(2);
  CHECK_FALSE(verify_drawing(p4, d).ok());
}

TEST_CASE("closed walks over the three finite tangents telescope") {
  // Right triangle with corners on a horizontal and the two diagonals.
  std::vector<Point> tri = {make_point(0, 0), make_point(2, 0), make_point(1, 1)};
  SlopeDependence dep = check_cycle_slope_dependence(tri);
  CHECK(dep.edge_tangents == std::vector<Rational>{0, -1, 1});
  CHECK(dep.vertex_coefficients == std::vector<Rational>{1, 1, -2});

  // The relation holds on irrational corners as well.
  Point a{ExactCoord::basis(1), ExactCoord()};
  Point b{ExactCoord::basis(2), ExactCoord::basis(2) - ExactCoord::basis(1)};
  Point c{ExactCoord::basis(2) * Rational(2) - ExactCoord::basis(1), ExactCoord()};
  SlopeDependence dep2 = check_cycle_slope_dependence({a, b, c});
  CHECK(dep2.edge_tangents.size() == 3);

  // Quadrilateral: opposite sides parallel, so half the coefficients vanish.
  std::vector<Point> par = {make_point(0, 0), make_point(2, 0), make_point(3, 1), make_point(1, 1)};
  SlopeDependence dep3 = check_cycle_slope_dependence(par);
  CHECK(dep3.edge_tangents == std::vector<Rational>{0, 1, 0, 1});
  CHECK(dep3.vertex_coefficients == std::vector<Rational>{1, -1, 1, -1});

  CHECK_THROWS_AS(check_cycle_slope_dependence({make_point(0, 0), make_point(0, 2), make_point(1, 1)}),
                  SlopeOutOfRange);
  CHECK_THROWS_AS(check_cycle_slope_dependence({make_point(0, 0), make_point(2, 1), make_point(1, 1)}),
                  SlopeOutOfRange);
  CHECK_THROWS_AS(check_cycle_slope_dependence({make_point(0, 0), make_point(1, 1)}),
                  PreconditionViolation);
  CHECK_THROWS_AS(check_cycle_slope_dependence({make_point(0, 0), make_point(0, 0), make_point(1, 1)}),
                  PreconditionViolation);
}

TEST_CASE("good slope sets") {
  std::array<Slope, 4> basic = {Slope::of_tangent(0), Slope::of_tangent(1),
                                Slope::vertical_slope(), Slope::of_tangent(-1)};
  CHECK(slope_set_is_good(basic));

  // {vertical, 1, -1, c} is good exactly for c in {0, 3, -3}: pairing the
  // fourth slope with the vertical forces c = 0, pairing it with a diagonal
  // forces c = -+3. The ratio pipeline's slope sets are generally not good,
  // which is fine since it never has to draw a triangle.
  for (const Rational& c : {Rational(3), Rational(-3), Rational(0)}) {
    std::array<Slope, 4> s = {Slope::vertical_slope(), Slope::of_tangent(1),
                              Slope::of_tangent(-1), Slope::of_tangent(c)};
    CHECK(slope_set_is_good(s));
  }
  for (const Rational& c : {Rational(2), Rational(-2), Rational(1, 3), Rational(7, 2)}) {
    std::array<Slope, 4> s = {Slope::vertical_slope(), Slope::of_tangent(1),
                              Slope::of_tangent(-1), Slope::of_tangent(c)};
    CHECK_FALSE(slope_set_is_good(s));
  }

  // {0, vertical, 2, 1/2} is not good: no pairing separates harmonically.
  std::array<Slope, 4> bad = {Slope::of_tangent(0), Slope::vertical_slope(),
                              Slope::of_tangent(2), Slope::of_tangent(Rational(1, 2))};
  CHECK_FALSE(slope_set_is_good(bad));

  // Flipping one sign fixes it.
  std::array<Slope, 4> fixed = {Slope::of_tangent(0), Slope::vertical_slope(),
                                Slope::of_tangent(2), Slope::of_tangent(-2)};
  CHECK(slope_set_is_good(fixed));

  std::array<Slope, 4> dup = {Slope::of_tangent(0), Slope::of_tangent(0),
                              Slope::vertical_slope(), Slope::of_tangent(1)};
  CHECK_THROWS_AS(slope_set_is_good(dup), DuplicateSlopes);
  std::array<Slope, 4> dup2 = {Slope::vertical_slope(), Slope::vertical_slope(),
                               Slope::of_tangent(2), Slope::of_tangent(1)};
  CHECK_THROWS_AS(slope_set_is_good(dup2), DuplicateSlopes);
}

TEST_CASE("parallelogram witnesses") {
  std::array<Slope, 4> basic = {Slope::of_tangent(0), Slope::of_tangent(1),
                                Slope::vertical_slope(), Slope::of_tangent(-1)};
  auto w = parallelogram_witness(basic);
  REQUIRE(w.has_value());
  // Sides and diagonals each use one slope of the set, four in total.
  auto uses = [&](const Point& p, const Point& q) {
    for (int i = 0; i < 4; ++i)
      if (segment_has_slope(p, q, basic[i])) return i;
    return -1;
  };
  std::set<int> seen = {uses((*w)[0], (*w)[1]), uses((*w)[1], (*w)[2]),
                        uses((*w)[2], (*w)[3]), uses((*w)[3], (*w)[0]),
                        uses((*w)[0], (*w)[2]), uses((*w)[1], (*w)[3])};
  CHECK(seen == std::set<int>{0, 1, 2, 3});
  // Opposite sides are parallel.
  CHECK(uses((*w)[0], (*w)[1]) == uses((*w)[2], (*w)[3]));
  CHECK(uses((*w)[1], (*w)[2]) == uses((*w)[3], (*w)[0]));

  std::array<Slope, 4> bad = {Slope::of_tangent(0), Slope::vertical_slope(),
                              Slope::of_tangent(2), Slope::of_tangent(Rational(1, 2))};
  CHECK(parallelogram_witness(bad) == std::nullopt);
  std::array<Slope, 4> dup = {Slope::of_tangent(0), Slope::of_tangent(0),
                              Slope::vertical_slope(), Slope::of_tangent(1)};
  CHECK_THROWS_AS(parallelogram_witness(dup), DuplicateSlopes);

  // A skewed good set gets a verified witness too.
  std::array<Slope, 4> skew = {Slope::of_tangent(Rational(1, 5)), Slope::of_tangent(3),
                               Slope::vertical_slope(), Slope::of_tangent(-1)};
  if (slope_set_is_good(skew)) {
    auto ws = parallelogram_witness(skew);
    REQUIRE(ws.has_value());
    int side = uses((*ws)[0], (*ws)[1]);
    CHECK(side >= 0);
  }
}
