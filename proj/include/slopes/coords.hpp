#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slopes/rational.hpp"

namespace slopes {

// Exact coordinate: a rational linear combination over the formal basis
// {1, sqrt(2), sqrt(3), sqrt(5), ...}. Index 0 is the rational unit and
// index i >= 1 stands for the square root of the i-th prime. Coefficient
// vectors are canonical (no explicit zeros), so two values are equal exactly
// when their term maps coincide; that makes equality a pure symbolic test.
//
// Ordering cannot be read off the coefficients, so compare() evaluates the
// difference with interval arithmetic at doubling precision until the sign
// separates. A nonzero difference always separates eventually because the
// basis elements are linearly independent over the rationals.
class ExactCoord {
 public:
  ExactCoord() = default;

  static ExactCoord from_rational(const Rational& q);
  static ExactCoord from_int(long v);
  // The formal basis element with the given index (index 0 gives 1).
  static ExactCoord basis(int index);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // The rational part (coefficient of the unit).
  Rational rational_part() const;

  ExactCoord operator+(const ExactCoord& o) const;
  ExactCoord operator-(const ExactCoord& o) const;
  ExactCoord operator-() const;
  ExactCoord& operator+=(const ExactCoord& o);
  ExactCoord& operator-=(const ExactCoord& o);
  // Scaling by rationals keeps the representation exact. There is no
  // coordinate-by-coordinate product; geometry code that needs products works
  // in an extended basis instead (see cross_difference_is_zero).
  ExactCoord operator*(const Rational& q) const;

  bool operator==(const ExactCoord& o) const { return terms_ == o.terms_; }
  bool operator!=(const ExactCoord& o) const { return !(*this == o); }

  // Three-way order: -1, 0 or +1. Equality is symbolic; strict order is
  // decided by interval evaluation starting at 64 bits and doubling up to
  // 4096 bits, past which an internal error is raised.
  int compare(const ExactCoord& o) const;
  bool operator<(const ExactCoord& o) const { return compare(o) < 0; }
  bool operator<=(const ExactCoord& o) const { return compare(o) <= 0; }
  bool operator>(const ExactCoord& o) const { return compare(o) > 0; }
  bool operator>=(const ExactCoord& o) const { return compare(o) >= 0; }

  int sign() const;

  // Rational enclosure [lo, hi] of the value at the given bit precision.
  std::pair<Rational, Rational> enclosure(int bits) const;
  // Midpoint of a 128-bit enclosure, for display only.
  double to_double() const;

  // Basis indices with nonzero coefficient, ascending.
  std::vector<int> support() const;
  const std::map<int, Rational>& terms() const { return terms_; }
  // Coefficient of the given basis index (zero if absent).
  Rational coeff(int index) const;

  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

inline ExactCoord operator*(const Rational& q, const ExactCoord& c) { return c * q; }

// Symbolic zero test for a*b - c*d. Products of two coordinates live in the
// extended basis {1} U {xi_i} U {xi_i * xi_j}; square roots of distinct
// squarefree integers are linearly independent over the rationals, so the
// expression vanishes exactly when every extended coefficient does. No
// ordering is ever needed on products, which keeps this purely symbolic.
bool cross_difference_is_zero(const ExactCoord& a, const ExactCoord& b,
                              const ExactCoord& c, const ExactCoord& d);

}  // namespace slopes
