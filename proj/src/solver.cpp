#include "slopes/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "slopes/errors.hpp"

namespace slopes {
namespace {

void check_reachable(const LinearFormSystem& sys, const std::vector<int>& r) {
  for (int i = 0; i < sys.n; ++i)
    if (r[i] < 0) throw UnreachableNode(i + 1);
}

// Solves (c I - A) x = a0 by Gaussian elimination over the rationals.
// Nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(const LinearFormSystem& sys,
                                                 const Rational& c) {
  int n = sys.n;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = -sys.coeff[i][j];
    m[i][i] += c;
    m[i][n] = sys.constant[i];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (int k = col; k <= n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

Rational form_value(const LinearFormSystem& sys, int i, const std::vector<Rational>& x) {
  Rational v = sys.constant[i];
  for (int j = 0; j < sys.n; ++j) v += sys.coeff[i][j] * x[j];
  return v;
}

}  // namespace

void validate_system(const LinearFormSystem& sys) {
  if (sys.n < 0) throw PreconditionViolation("negative system size");
  if (static_cast<int>(sys.constant.size()) != sys.n ||
      static_cast<int>(sys.coeff.size()) != sys.n)
    throw PreconditionViolation("system arrays do not match its size");
  for (const auto& row : sys.coeff)
    if (static_cast<int>(row.size()) != sys.n)
      throw PreconditionViolation("coefficient row of wrong length");
  for (const Rational& a : sys.constant)
    if (a < 0) throw PreconditionViolation("negative constant term");
  for (const auto& row : sys.coeff)
    for (const Rational& a : row)
      if (a < 0) throw PreconditionViolation("negative coefficient");
}

std::vector<std::vector<int>> dependency_digraph(const LinearFormSystem& sys) {
  std::vector<std::vector<int>> adj(sys.n + 1);
  for (int i = 0; i < sys.n; ++i) {
    if (sys.constant[i] != 0) adj[0].push_back(i + 1);
    for (int j = 0; j < sys.n; ++j)
      if (sys.coeff[i][j] != 0) adj[j + 1].push_back(i + 1);
  }
  return adj;
}

std::vector<int> r_levels(const LinearFormSystem& sys) {
  auto adj = dependency_digraph(sys);
  std::vector<int> dist(sys.n + 1, -1);
  dist[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return {dist.begin() + 1, dist.end()};
}

SolverSolution solve_equal_ratios(const LinearFormSystem& sys, std::optional<Rational> c) {
  validate_system(sys);
  check_reachable(sys, r_levels(sys));

  Rational value;
  if (c) {
    value = *c;
    if (value <= 0) throw PreconditionViolation("common value must be positive");
  } else {
    Rational max_row = 0;
    for (int i = 0; i < sys.n; ++i) {
      Rational s = 0;
      for (int j = 0; j < sys.n; ++j) s += sys.coeff[i][j];
      max_row = std::max(max_row, s);
    }
    value = std::max(Rational(2), Rational(1) + max_row);
  }

  auto x = solve_linear(sys, value);
  if (!x) throw PreconditionViolation("common value makes the system singular");
  for (const Rational& xi : *x)
    if (xi <= 0)
      throw PreconditionViolation("common value too small for a positive solution");

  SolverSolution sol;
  sol.x = std::move(*x);
  sol.common_value = value;
  sol.residuals.resize(sys.n);
  for (int i = 0; i < sys.n; ++i) {
    sol.residuals[i] = value * sol.x[i] - form_value(sys, i, sol.x);
    if (sol.residuals[i] != 0) throw InternalError("nonzero residual after exact solve");
  }
  return sol;
}

IterativeSolution solve_by_iteration(const LinearFormSystem& sys) {
  validate_system(sys);
  auto r = r_levels(sys);
  check_reachable(sys, r);

  IterativeSolution out;
  if (sys.n == 0) {
    out.exact_common_value = Rational(2);
    out.common_value = 2.0;
    return out;
  }

  int n = sys.n;
  int rmax = *std::max_element(r.begin(), r.end());
  std::vector<double> b(n);
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    b[i] = sys.constant[i].convert_to<double>();
    for (int j = 0; j < n; ++j) a[i][j] = sys.coeff[i][j].convert_to<double>();
  }
  std::vector<std::vector<int>> by_level(rmax + 1);
  for (int i = 0; i < n; ++i) by_level[r[i]].push_back(i);

  Rational eps_exact;
  if (rmax == 1) {
    // Every constant is positive; the certified step size is 1 / (10 K)
    // with K the largest row sum of A weighted by the constants.
    Rational k = 0;
    for (int i = 0; i < n; ++i) {
      Rational s = 0;
      for (int j = 0; j < n; ++j) s += sys.coeff[i][j] * sys.constant[j];
      k = std::max(k, Rational(s / sys.constant[i]));
    }
    eps_exact = k > 0 ? Rational(1) / (10 * k) : Rational(1, 10);
  } else {
    eps_exact = Rational(1, 10);
  }

  std::vector<double> xp(n), x(n), gamma(n);
  for (int halvings = 0; halvings < 60; ++halvings, eps_exact /= 2) {
    double eps = eps_exact.convert_to<double>();
    std::vector<double> alpha(n, 1.5);
    bool band_ok = true;
    for (int it = 1; it <= 10000; ++it) {
      for (int level = 1; level <= rmax; ++level) {
        for (int i : by_level[level]) {
          double beta = level == 1 ? b[i] : 0.0;
          if (level > 1)
            for (int j : by_level[level - 1]) beta += a[i][j] * xp[j];
          xp[i] = beta / alpha[i];
        }
      }
      for (int i = 0; i < n; ++i) x[i] = std::pow(eps, r[i]) * xp[i];
      band_ok = true;
      for (int i = 0; i < n; ++i) {
        double li = b[i];
        for (int j = 0; j < n; ++j) li += a[i][j] * x[j];
        double scaled = eps * li / x[i];  // eps * g_i(x)
        double ratio = alpha[i] / scaled;
        if (!(ratio >= 0.9 && ratio <= 1.1)) {
          band_ok = false;
          break;
        }
        gamma[i] = 1.5 * ratio;
      }
      if (!band_ok) break;  // eps too coarse, halve and restart
      double delta = 0;
      for (int i = 0; i < n; ++i)
        delta = std::max(delta, std::abs(gamma[i] - alpha[i]) / std::abs(alpha[i]));
      alpha = gamma;
      if (delta < 1e-12) {
        for (int level = 1; level <= rmax; ++level)
          for (int i : by_level[level]) {
            double beta = level == 1 ? b[i] : 0.0;
            if (level > 1)
              for (int j : by_level[level - 1]) beta += a[i][j] * xp[j];
            xp[i] = beta / alpha[i];
          }
        out.x.resize(n);
        for (int i = 0; i < n; ++i) out.x[i] = std::pow(eps, r[i]) * xp[i];
        out.exact_common_value = Rational(3, 2) / eps_exact;
        out.common_value = 1.5 / eps;
        out.iterations = it;
        return out;
      }
    }
    if (band_ok)
      throw NonConvergence("fixed-point iteration exceeded 10000 steps");
  }
  throw NonConvergence("no workable step size after 60 halvings");
}

}  // namespace slopes
