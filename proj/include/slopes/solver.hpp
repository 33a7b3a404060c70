#pragma once

#include <optional>
#include <vector>

#include "slopes/coords.hpp"

namespace slopes {

// System of linear forms L_i(x) = a_{i,0} + sum_j a_{i,j} x_j with
// non-negative rational coefficients, one form per variable. The goal is an
// all-positive x making every ratio L_i(x) / x_i equal.
struct LinearFormSystem {
  int n = 0;
  std::vector<Rational> constant;            // a_{i,0}
  std::vector<std::vector<Rational>> coeff;  // a_{i,j}, row i column j
};

// Shape and sign checks; PreconditionViolation on failure.
void validate_system(const LinearFormSystem& sys);

// Dependency digraph on nodes 0..n: node 0 feeds node i+1 when a_{i,0} is
// nonzero, and node j+1 feeds node i+1 when a_{i,j} is nonzero.
std::vector<std::vector<int>> dependency_digraph(const LinearFormSystem& sys);

// Distance from node 0 to each variable's node in the dependency digraph,
// -1 where unreachable. A variable can carry a positive value in an
// equal-ratio solution exactly when its node is reachable.
std::vector<int> r_levels(const LinearFormSystem& sys);

struct SolverSolution {
  std::vector<Rational> x;          // all positive
  Rational common_value;            // the shared ratio
  std::vector<Rational> residuals;  // common_value * x_i - L_i(x), exactly zero
};

// Exact solution of L_i(x) / x_i = c for every i, computed as the linear
// system (c I - A) x = a0 over the rationals. The default c = max(2, 1 +
// largest row sum of A) makes the matrix strictly diagonally dominant with
// a non-negative inverse, so x_i > 0 exactly when variable i is reachable
// in the dependency digraph; unreachable variables raise UnreachableNode
// before any solving. A caller-supplied c must be positive and keep the
// system nonsingular with an all-positive solution, else
// PreconditionViolation.
SolverSolution solve_equal_ratios(const LinearFormSystem& sys,
                                  std::optional<Rational> c = std::nullopt);

struct IterativeSolution {
  std::vector<double> x;
  double common_value = 0;
  // The common value 1.5 / epsilon as an exact rational, so the result can
  // be cross-checked against solve_equal_ratios at the same value.
  Rational exact_common_value = 0;
  int iterations = 0;
};

// Floating-point fixed-point iteration on the cube [1, 2]^n. Each variable
// is written x_i = eps^{r(i)} x'_i; for a trial vector alpha the scaled
// variables are filled in by increasing level, x'_i = beta_i / alpha_i with
// beta_i the constant at level one and the level-(r(i)-1) part of the form
// above. The map alpha -> 1.5 * alpha_i / (eps g_i(x)) is then iterated to
// relative tolerance 1e-12; when every constant is positive this is exactly
// the map alpha -> 1.5 / (1 + eps L_i(x') / B_i) and eps = 1 / (10 K) with
// K the largest weighted row sum. Deeper systems shrink eps by halving
// whenever an iterate drifts outside the certified band. Throws
// NonConvergence after 10000 steps at a given eps or 60 halvings, and
// UnreachableNode when the exact solver would.
IterativeSolution solve_by_iteration(const LinearFormSystem& sys);

}  // namespace slopes
