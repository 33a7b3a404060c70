#pragma once

#include <stdexcept>
#include <string>

namespace slopes {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input could not be parsed (edge lists, graph6, serialized drawings).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A graph operation was asked to exceed maximum degree three, or an input
// graph already does.
struct DegreeViolation : Error {
  explicit DegreeViolation(const std::string& what) : Error(what) {}
};

// A documented precondition of a public entry point does not hold.
struct PreconditionViolation : Error {
  explicit PreconditionViolation(const std::string& what) : Error(what) {}
};

// The equal-ratio system is solvable only when every variable is reachable
// from variable 0 in the dependency digraph; carries the offending node.
struct UnreachableNode : Error {
  explicit UnreachableNode(int node)
      : Error("variable " + std::to_string(node) +
              " is not reachable from variable 0 in the dependency digraph"),
        node_index(node) {}
  int node_index;
};

// Iterative solver failed to reach its tolerance within the step budget.
struct NonConvergence : Error {
  explicit NonConvergence(const std::string& what) : Error(what) {}
};

// A search that may legitimately come up empty did so (for example no
// suitable matching cut exists).
struct NotFound : Error {
  explicit NotFound(const std::string& what) : Error(what) {}
};

// The basic-slope pipeline has no strategy for this graph. Callers switch
// to the ratio pipeline, which serves any bridgeless input at the price of
// one non-basic slope.
struct Fallback : Error {
  explicit Fallback(const std::string& what) : Error(what) {}
};

// Perfect matching requested on a graph that has none; for connected cubic
// inputs this signals a bridge.
struct NoPerfectMatching : Error {
  explicit NoPerfectMatching(const std::string& what) : Error(what) {}
};

// The distinguished-edge walk ended in a state that violates its selection
// conditions.
struct SelectionFailed : Error {
  explicit SelectionFailed(const std::string& what) : Error(what) {}
};

// A cycle handed to the slope-dependence check uses a slope outside the
// horizontal and diagonal ones the certificate is defined for.
struct SlopeOutOfRange : Error {
  explicit SlopeOutOfRange(const std::string& what) : Error(what) {}
};

// Slope sets under test must contain four pairwise distinct slopes.
struct DuplicateSlopes : Error {
  explicit DuplicateSlopes(const std::string& what) : Error(what) {}
};

// Cycle decomposition refuses graphs with triangles; callers contract them
// first.
struct TriangleFound : Error {
  explicit TriangleFound(const std::string& what) : Error(what) {}
};

struct NoTriangle : Error {
  explicit NoTriangle(const std::string& what) : Error(what) {}
};

// Triangle contraction requires the three outgoing edges to end in three
// distinct vertices outside the triangle.
struct NonDisjointBoundary : Error {
  explicit NonDisjointBoundary(const std::string& what) : Error(what) {}
};

// An internal invariant failed. Seeing this means a bug, not bad input.
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace slopes
