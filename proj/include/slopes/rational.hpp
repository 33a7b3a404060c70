#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace slopes {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline int sign_of(const Rational& q) { return q.sign(); }

// Parses "p" or "p/q" with optional leading minus. Throws std::runtime_error
// on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

std::string format_rational(const Rational& q);

// floor(sqrt(v)) for v >= 0.
Int isqrt(const Int& v);

// Smallest k >= 0 with 2^k * den >= num, for a positive rational num/den.
// This is ceil(log2(num/den)) clamped below at zero.
int ceil_log2_rational(const Int& numerator_part, const Int& denominator_part);

// i-th prime for the coordinate basis: prime_for_index(1) == 2,
// prime_for_index(2) == 3, and so on.
Int prime_for_index(int i);

}  // namespace slopes
