#include "slopes/verifier.hpp"

#include <sstream>

#include "slopes/errors.hpp"
#include "slopes/graph_algos.hpp"

namespace slopes {

std::vector<Slope> basic_slope_set() {
  return {Slope::of_tangent(0), Slope::of_tangent(1), Slope::vertical_slope(),
          Slope::of_tangent(-1)};
}

std::vector<Slope> four_slope_set(const Rational& c) {
  return {Slope::vertical_slope(), Slope::of_tangent(1), Slope::of_tangent(-1),
          Slope::of_tangent(c)};
}

std::string VerificationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  out << issues.size() << " issue(s):";
  for (const auto& s : issues) out << "\n  " << s;
  return out.str();
}

VerificationReport verify_drawing(const Graph& g, const Drawing& d) {
  VerificationReport rep;
  int n = g.vertex_count();
  if (static_cast<int>(d.positions.size()) != n) {
    rep.issues.push_back("drawing has " + std::to_string(d.positions.size()) +
                         " positions for " + std::to_string(n) + " vertices");
    return rep;
  }
  if (d.slopes.empty()) rep.issues.push_back("empty slope set");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (d.positions[u] == d.positions[v])
        rep.issues.push_back("vertices " + std::to_string(u) + " and " +
                             std::to_string(v) + " share a position");
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [u, v] = g.edge(id);
    if (d.positions[u] == d.positions[v]) continue;  // reported above
    bool matched = false;
    for (const auto& s : d.slopes)
      if (segment_has_slope(d.positions[u], d.positions[v], s)) matched = true;
    if (!matched)
      rep.issues.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                           " uses a slope outside the allowed set");
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [u, v] = g.edge(id);
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (point_on_open_segment(d.positions[w], d.positions[u], d.positions[v]))
        rep.issues.push_back("vertex " + std::to_string(w) + " lies inside edge " +
                             std::to_string(u) + "-" + std::to_string(v));
    }
  }
  return rep;
}

SlopeDependence check_cycle_slope_dependence(const std::vector<Point>& corners) {
  int m = static_cast<int>(corners.size());
  if (m < 3)
    throw PreconditionViolation("slope dependence needs at least three corners");
  SlopeDependence dep;
  dep.edge_tangents.resize(m);
  for (int i = 0; i < m; ++i) {
    const Point& a = corners[i];
    const Point& b = corners[(i + 1) % m];
    ExactCoord dx = b.x - a.x, dy = b.y - a.y;
    if (dx.is_zero() && dy.is_zero())
      throw PreconditionViolation("corners " + std::to_string(i) + " and " +
                                  std::to_string((i + 1) % m) + " coincide");
    if (dx.is_zero())
      throw SlopeOutOfRange("edge out of corner " + std::to_string(i) +
                            " is vertical");
    if (dy.is_zero())
      dep.edge_tangents[i] = 0;
    else if ((dy - dx).is_zero())
      dep.edge_tangents[i] = 1;
    else if ((dy + dx).is_zero())
      dep.edge_tangents[i] = -1;
    else
      throw SlopeOutOfRange("edge out of corner " + std::to_string(i) +
                            " has a tangent outside {0,+1,-1}");
  }
  dep.vertex_coefficients.resize(m);
  ExactCoord total;
  for (int i = 0; i < m; ++i) {
    Rational into = dep.edge_tangents[(i + m - 1) % m];
    Rational out_of = dep.edge_tangents[i];
    dep.vertex_coefficients[i] = into - out_of;
    total += corners[i].x * dep.vertex_coefficients[i];
  }
  if (!total.is_zero())
    throw InternalError("telescoped slope relation does not vanish");
  return dep;
}

namespace {

// Direction vector of a slope with rational entries.
std::pair<Rational, Rational> direction(const Slope& s) {
  if (s.vertical) return {0, 1};
  return {1, s.tangent};
}

Rational wedge(const std::pair<Rational, Rational>& a,
               const std::pair<Rational, Rational>& b) {
  return a.first * b.second - a.second * b.first;
}

// The three ways to split indices {0,1,2,3} into two unordered pairs.
constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};

}  // namespace

namespace {

void require_distinct(const std::array<Slope, 4>& slopes) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (slopes[i] == slopes[j])
        throw DuplicateSlopes("slopes " + std::to_string(i) + " and " +
                              std::to_string(j) + " coincide");
}

}  // namespace

bool slope_set_is_good(const std::array<Slope, 4>& slopes) {
  require_distinct(slopes);
  std::array<std::pair<Rational, Rational>, 4> u;
  for (int i = 0; i < 4; ++i) u[i] = direction(slopes[i]);
  for (const auto& p : kPairings) {
    // Pair (a,b) against (c,d): harmonic when (a^c)(b^d) + (a^d)(b^c) = 0.
    const auto &a = u[p[0]], &b = u[p[1]], &c = u[p[2]], &d = u[p[3]];
    if (wedge(a, c) * wedge(b, d) + wedge(a, d) * wedge(b, c) == 0) return true;
  }
  return false;
}

std::optional<std::array<Point, 4>> parallelogram_witness(
    const std::array<Slope, 4>& slopes) {
  require_distinct(slopes);
  std::array<std::pair<Rational, Rational>, 4> u;
  for (int i = 0; i < 4; ++i) u[i] = direction(slopes[i]);
  for (const auto& p : kPairings) {
    // Either pair of the split can act as the sides, and the two diagonals
    // can attach to the corners in either order.
    for (int variant = 0; variant < 4; ++variant) {
      int side1 = p[0], side2 = p[1], diag1 = p[2], diag2 = p[3];
      if (variant & 1) {
        std::swap(side1, diag1);
        std::swap(side2, diag2);
      }
      if (variant & 2) std::swap(diag1, diag2);
      const auto &a = u[side1], &b = u[side2], &d1 = u[diag1], &d2 = u[diag2];
      // Corners 0, a, a + s*b, s*b. First diagonal spans a + s*b, second
      // spans s*b - a; each gives one linear equation for s.
      Rational den1 = wedge(b, d1), den2 = wedge(b, d2);
      if (den1 == 0 || den2 == 0) continue;
      Rational s1 = -wedge(a, d1) / den1;
      Rational s2 = wedge(a, d2) / den2;
      if (s1 != s2 || s1 == 0) continue;
      Rational s = s1;
      std::array<Point, 4> corners;
      corners[0] = make_point(0, 0);
      corners[1] = {ExactCoord::from_rational(a.first),
                    ExactCoord::from_rational(a.second)};
      corners[2] = {ExactCoord::from_rational(a.first + s * b.first),
                    ExactCoord::from_rational(a.second + s * b.second)};
      corners[3] = {ExactCoord::from_rational(s * b.first),
                    ExactCoord::from_rational(s * b.second)};
      bool distinct = true;
      for (int i = 0; i < 4 && distinct; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (corners[i] == corners[j]) distinct = false;
      if (!distinct) continue;
      auto has = [&](const Point& x, const Point& y, int slope_idx) {
        return segment_has_slope(x, y, slopes[slope_idx]);
      };
      if (has(corners[0], corners[1], side1) && has(corners[3], corners[2], side1) &&
          has(corners[0], corners[3], side2) && has(corners[1], corners[2], side2) &&
          has(corners[0], corners[2], diag1) && has(corners[1], corners[3], diag2))
        return corners;
    }
  }
  return std::nullopt;
}

}  // namespace slopes
