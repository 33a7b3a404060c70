#include <doctest.h>

#include <stdexcept>

#include "slopes/coords.hpp"
#include "slopes/errors.hpp"
#include "slopes/rational.hpp"

using namespace slopes;

namespace {

ExactCoord sqrt2() { return ExactCoord::basis(1); }
ExactCoord sqrt3() { return ExactCoord::basis(2); }
ExactCoord sqrt5() { return ExactCoord::basis(3); }

}  // namespace

TEST_CASE("rational helpers parse and format") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(parse_rational(format_rational(Rational(22, 7))) == Rational(22, 7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::runtime_error);
  CHECK_THROWS_AS(parse_rational("x"), std::runtime_error);
  CHECK_THROWS_AS(parse_rational(""), std::runtime_error);
}

TEST_CASE("integer square root") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(1)) == 1);
  CHECK(isqrt(Int(2)) == 1);
  CHECK(isqrt(Int(144)) == 12);
  CHECK(isqrt(Int(145)) == 12);
  Int big = Int(1) << 200;
  CHECK(isqrt(big * big) == big);
  CHECK(isqrt(big * big - 1) == big - 1);
}

TEST_CASE("ceil log2 of a rational") {
  CHECK(ceil_log2_rational(1, 1) == 0);
  CHECK(ceil_log2_rational(1, 8) == 0);
  CHECK(ceil_log2_rational(5, 1) == 3);
  CHECK(ceil_log2_rational(8, 1) == 3);
  CHECK(ceil_log2_rational(9, 1) == 4);
  CHECK(ceil_log2_rational(7, 2) == 2);
}

TEST_CASE("basis indices map to primes") {
  CHECK(prime_for_index(1) == 2);
  CHECK(prime_for_index(2) == 3);
  CHECK(prime_for_index(3) == 5);
  CHECK(prime_for_index(4) == 7);
  CHECK(prime_for_index(10) == 29);
}

TEST_CASE("construction and rational part") {
  ExactCoord zero;
  CHECK(zero.is_zero());
  CHECK(zero.is_rational());
  CHECK(zero.rational_part() == 0);

  ExactCoord q = ExactCoord::from_rational(Rational(3, 7));
  CHECK(q.is_rational());
  CHECK(q.rational_part() == Rational(3, 7));

  ExactCoord i = ExactCoord::from_int(-4);
  CHECK(i.rational_part() == -4);

  CHECK(ExactCoord::basis(0) == ExactCoord::from_int(1));
  CHECK_FALSE(sqrt2().is_rational());
  CHECK(sqrt2().rational_part() == 0);
}

TEST_CASE("arithmetic is symbolic") {
  ExactCoord a = sqrt2() + sqrt3();
  ExactCoord b = sqrt3() + sqrt2();
  CHECK(a == b);
  CHECK(a - sqrt3() == sqrt2());
  CHECK((a - a).is_zero());
  CHECK(-a == ExactCoord() - a);
  CHECK(a * Rational(0) == ExactCoord());
  CHECK(a * Rational(2) == a + a);
  CHECK(Rational(2) * a == a + a);

  ExactCoord c = sqrt2();
  c += sqrt2();
  CHECK(c == sqrt2() * Rational(2));
  c -= sqrt2() * Rational(2);
  CHECK(c.is_zero());

  // Cancellation leaves a canonical term map, so equality keeps working.
  ExactCoord d = sqrt2() * Rational(1, 3) + sqrt5() - sqrt2() * Rational(1, 3);
  CHECK(d == sqrt5());
  CHECK(d.support() == std::vector<int>{3});
}

TEST_CASE("ordering separates irrationals") {
  CHECK(sqrt2() < sqrt3());
  CHECK(sqrt3() < sqrt5());
  // sqrt(2) + sqrt(3) > sqrt(5) even though 2 + 3 = 5.
  CHECK(sqrt2() + sqrt3() > sqrt5());
  CHECK((sqrt2() + sqrt3()).sign() == 1);
  CHECK((sqrt2() - sqrt3()).sign() == -1);
  CHECK(ExactCoord().sign() == 0);
  CHECK(sqrt2().compare(sqrt2()) == 0);
  CHECK(sqrt2() <= sqrt2());
  CHECK(sqrt2() >= sqrt2());

  // sqrt(2) + sqrt(3) = 3.14626436994... sits between these two rationals,
  // which bracket it to eight decimal places.
  ExactCoord s = sqrt2() + sqrt3();
  CHECK(s > ExactCoord::from_rational(Rational(314626436, 100000000)));
  CHECK(s < ExactCoord::from_rational(Rational(314626437, 100000000)));
}

TEST_CASE("close values still separate") {
  // 665857/470832 is a continued-fraction convergent of sqrt(2), closer than
  // 1e-12; the comparison must still get the side right.
  ExactCoord approx = ExactCoord::from_rational(Rational(665857, 470832));
  CHECK(sqrt2() < approx);
  CHECK(sqrt2() != approx);
}

TEST_CASE("enclosures narrow with precision") {
  ExactCoord s = sqrt2();
  auto [lo1, hi1] = s.enclosure(16);
  auto [lo2, hi2] = s.enclosure(256);
  CHECK(lo1 <= lo2);
  CHECK(hi2 <= hi1);
  CHECK(lo2 < hi2);
  // The 256-bit enclosure pins sqrt(2) far tighter than 1e-60.
  CHECK(hi2 - lo2 < Rational(1, Int(1) << 200));
  CHECK(lo2 * lo2 < 2);
  CHECK(hi2 * hi2 > 2);
  CHECK(s.to_double() == doctest::Approx(1.41421356237309).epsilon(1e-12));
}

TEST_CASE("support terms and coefficients") {
  ExactCoord v = ExactCoord::from_int(7) - sqrt3() * Rational(2, 5);
  CHECK(v.support() == std::vector<int>{0, 2});
  CHECK(v.coeff(0) == 7);
  CHECK(v.coeff(2) == Rational(-2, 5));
  CHECK(v.coeff(1) == 0);
  CHECK(v.terms().size() == 2);
  CHECK(v.terms().at(2) == Rational(-2, 5));
}

TEST_CASE("to_string is readable") {
  CHECK(ExactCoord().to_string() == "0");
  ExactCoord v = ExactCoord::from_int(2) + sqrt2();
  // The rendering names the radicand, so the exact value is recoverable.
  CHECK(v.to_string().find("2") != std::string::npos);
  CHECK(v.to_string() != (sqrt2() + sqrt2()).to_string());
}

TEST_CASE("cross differences vanish exactly when equal") {
  // (sqrt2)(sqrt3) - (sqrt3)(sqrt2) = 0.
  CHECK(cross_difference_is_zero(sqrt2(), sqrt3(), sqrt3(), sqrt2()));
  // (sqrt2)(sqrt2) - 2 = 0: the product collapses to a rational.
  CHECK(cross_difference_is_zero(sqrt2(), sqrt2(), ExactCoord::from_int(2),
                                 ExactCoord::from_int(1)));
  // (sqrt2 + 1)(sqrt2 - 1) = 1.
  ExactCoord one = ExactCoord::from_int(1);
  CHECK(cross_difference_is_zero(sqrt2() + one, sqrt2() - one, one, one));
  // (sqrt2)(sqrt3) = sqrt6 is not rational, so against 1*q it never vanishes.
  CHECK_FALSE(cross_difference_is_zero(sqrt2(), sqrt3(), one,
                                       ExactCoord::from_rational(Rational(449, 183))));
  CHECK_FALSE(cross_difference_is_zero(sqrt2(), sqrt2(), ExactCoord::from_int(3), one));
  // Zero entries make the whole products vanish.
  CHECK(cross_difference_is_zero(ExactCoord(), sqrt3(), sqrt5(), ExactCoord()));
}

TEST_CASE("comparison cost stays sane on wide supports") {
  // A value using ten basis elements with large coefficients still compares
  // against a nearby rational without blowing past the precision ladder.
  ExactCoord wide;
  for (int i = 1; i <= 10; ++i) wide += ExactCoord::basis(i) * Rational(1000 + i, 7);
  ExactCoord mid = ExactCoord::from_rational(wide.enclosure(128).first);
  CHECK(wide > mid);
  CHECK(wide != mid);
}
