#include "slopes/coords.hpp"

#include <sstream>

#include "slopes/errors.hpp"

namespace slopes {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational '" + s + "'");
  }
}

std::string format_rational(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << "/" << denominator(q);
  return out.str();
}

Int isqrt(const Int& v) {
  if (v < 0) throw InternalError("isqrt of negative value");
  return boost::multiprecision::sqrt(v);
}

int ceil_log2_rational(const Int& numerator_part, const Int& denominator_part) {
  if (numerator_part <= 0 || denominator_part <= 0)
    throw InternalError("ceil_log2_rational needs positive arguments");
  int k = 0;
  Int scaled = denominator_part;
  while (scaled < numerator_part) {
    scaled <<= 1;
    ++k;
  }
  return k;
}

Int prime_for_index(int i) {
  if (i < 1) throw InternalError("prime index must be positive");
  static std::vector<Int> primes = {2, 3};
  while (static_cast<int>(primes.size()) < i) {
    Int candidate = primes.back() + 2;
    for (;; candidate += 2) {
      bool divisible = false;
      for (const Int& p : primes) {
        if (p * p > candidate) break;
        if (candidate % p == 0) {
          divisible = true;
          break;
        }
      }
      if (!divisible) break;
    }
    primes.push_back(candidate);
  }
  return primes[i - 1];
}

ExactCoord ExactCoord::from_rational(const Rational& q) {
  ExactCoord c;
  if (q != 0) c.terms_[0] = q;
  return c;
}

ExactCoord ExactCoord::from_int(long v) { return from_rational(Rational(v)); }

ExactCoord ExactCoord::basis(int index) {
  if (index < 0) throw InternalError("negative basis index");
  ExactCoord c;
  c.terms_[index] = 1;
  return c;
}

bool ExactCoord::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational ExactCoord::rational_part() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

ExactCoord ExactCoord::operator+(const ExactCoord& o) const {
  ExactCoord r = *this;
  r += o;
  return r;
}

ExactCoord ExactCoord::operator-(const ExactCoord& o) const {
  ExactCoord r = *this;
  r -= o;
  return r;
}

ExactCoord ExactCoord::operator-() const {
  ExactCoord r;
  for (const auto& [i, c] : terms_) r.terms_[i] = -c;
  return r;
}

ExactCoord& ExactCoord::operator+=(const ExactCoord& o) {
  for (const auto& [i, c] : o.terms_) {
    auto it = terms_.find(i);
    if (it == terms_.end()) {
      terms_[i] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

ExactCoord& ExactCoord::operator-=(const ExactCoord& o) {
  *this += -o;
  return *this;
}

ExactCoord ExactCoord::operator*(const Rational& q) const {
  ExactCoord r;
  if (q == 0) return r;
  for (const auto& [i, c] : terms_) r.terms_[i] = c * q;
  return r;
}

std::pair<Rational, Rational> ExactCoord::enclosure(int bits) const {
  Rational lo = 0, hi = 0;
  Int scale = Int(1) << bits;
  for (const auto& [i, c] : terms_) {
    if (i == 0) {
      lo += c;
      hi += c;
      continue;
    }
    // floor(sqrt(p) * 2^bits) brackets sqrt(p) between s/2^bits and
    // (s+1)/2^bits; the sign of the coefficient decides which end is which.
    Int s = isqrt(prime_for_index(i) << (2 * bits));
    Rational lo_root(s, scale), hi_root(s + 1, scale);
    if (c >= 0) {
      lo += c * lo_root;
      hi += c * hi_root;
    } else {
      lo += c * hi_root;
      hi += c * lo_root;
    }
  }
  return {lo, hi};
}

int ExactCoord::compare(const ExactCoord& o) const {
  ExactCoord d = *this - o;
  if (d.terms_.empty()) return 0;
  for (int bits = 64; bits <= 4096; bits *= 2) {
    auto [lo, hi] = d.enclosure(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw InternalError("interval comparison failed to separate at 4096 bits");
}

int ExactCoord::sign() const {
  static const ExactCoord zero;
  return compare(zero);
}

double ExactCoord::to_double() const {
  auto [lo, hi] = enclosure(128);
  Rational mid = (lo + hi) / 2;
  return mid.convert_to<double>();
}

std::vector<int> ExactCoord::support() const {
  std::vector<int> s;
  for (const auto& [i, c] : terms_) s.push_back(i);
  return s;
}

Rational ExactCoord::coeff(int index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string ExactCoord::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    if (!first)
      out << (c > 0 ? " + " : " - ");
    else if (c < 0)
      out << "-";
    Rational mag = c < 0 ? Rational(-c) : c;
    first = false;
    if (i == 0) {
      out << format_rational(mag);
    } else {
      if (mag != 1) out << format_rational(mag) << "*";
      out << "sqrt(" << prime_for_index(i) << ")";
    }
  }
  return out.str();
}

bool cross_difference_is_zero(const ExactCoord& a, const ExactCoord& b,
                              const ExactCoord& c, const ExactCoord& d) {
  // Extended coefficients keyed by the normalized index pair: (0,0) is the
  // unit, (0,j) is xi_j and (i,j) with 0 < i < j is sqrt(p_i * p_j). Equal
  // indices square to the prime itself and fold into the unit.
  std::map<std::pair<int, int>, Rational> acc;
  auto accumulate = [&acc](const ExactCoord& u, const ExactCoord& v, int sgn) {
    for (const auto& [i, ci] : u.terms()) {
      for (const auto& [j, cj] : v.terms()) {
        Rational prod = ci * cj * sgn;
        std::pair<int, int> key;
        if (i == j) {
          key = {0, 0};
          if (i != 0) prod *= Rational(prime_for_index(i));
        } else {
          key = {std::min(i, j), std::max(i, j)};
        }
        auto it = acc.find(key);
        if (it == acc.end()) {
          if (prod != 0) acc[key] = prod;
        } else {
          it->second += prod;
          if (it->second == 0) acc.erase(it);
        }
      }
    }
  };
  accumulate(a, b, +1);
  accumulate(c, d, -1);
  return acc.empty();
}

}  // namespace slopes
