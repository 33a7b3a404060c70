#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slopes/drawing.hpp"
#include "slopes/graph.hpp"

namespace slopes {

struct VerificationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

// Machine check of a drawing under exact arithmetic:
//   - one position per vertex and all positions pairwise distinct,
//   - every edge segment uses a slope from the drawing's slope set,
//   - no vertex lies in the open interior of any edge segment.
// Edge crossings are allowed; everything else is reported as an issue.
VerificationReport verify_drawing(const Graph& g, const Drawing& d);

// Certificate for a closed polygon whose edges all have tangent 0, +1 or -1:
// walking around it, the rises telescope away, leaving the exact relation
//   sum_i (t_in(i) - t_out(i)) * x_i = 0
// over the corner x coordinates, where t is the edge tangent. The
// coefficient at corner i is nonzero exactly when the two edges meeting
// there have different tangents.
struct SlopeDependence {
  std::vector<Rational> edge_tangents;        // tangent of corner i to corner i+1
  std::vector<Rational> vertex_coefficients;  // t_in - t_out at each corner
};

// Computes the certificate for corners listed in cycle order and confirms
// the relation vanishes under exact arithmetic. Throws SlopeOutOfRange when
// some edge is vertical or has a tangent outside {0, +1, -1},
// PreconditionViolation for fewer than three corners or a repeated
// consecutive corner, and InternalError if the relation fails to hold, which
// would mean broken arithmetic.
SlopeDependence check_cycle_slope_dependence(const std::vector<Point>& corners);

// Four directions are good when they can be split into two pairs that
// separate each other harmonically, equivalently when some parallelogram
// uses one pair for its sides and the other for its diagonals. The test
// tries the three pairings with exact rational wedges. The four slopes must
// be pairwise distinct, else DuplicateSlopes.
bool slope_set_is_good(const std::array<Slope, 4>& slopes);

// For a good set, builds an explicit parallelogram: four points whose sides
// take one pair of the slopes and whose diagonals take the other. The scale
// factor along each diagonal comes from two independent linear solves that
// agree exactly when the pairing is harmonic; the returned quadrilateral is
// re-verified segment by segment. Nullopt when the set is not good, and
// DuplicateSlopes when the four slopes are not pairwise distinct.
std::optional<std::array<Point, 4>> parallelogram_witness(const std::array<Slope, 4>& slopes);

}  // namespace slopes
