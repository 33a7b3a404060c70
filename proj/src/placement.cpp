#include "slopes/placement.hpp"

namespace slopes {
namespace {

long floor_of(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  auto q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q.convert_to<long>();
}

}  // namespace

ExactCoord exact_int(long v) { return ExactCoord::from_int(v); }

ExactCoord abs_coord(const ExactCoord& v) { return v.sign() < 0 ? -v : v; }

ExactCoord min_x(const std::vector<Point>& ps) {
  ExactCoord m = ps.front().x;
  for (const auto& p : ps)
    if (p.x < m) m = p.x;
  return m;
}

ExactCoord max_x(const std::vector<Point>& ps) {
  ExactCoord m = ps.front().x;
  for (const auto& p : ps)
    if (p.x > m) m = p.x;
  return m;
}

ExactCoord min_y(const std::vector<Point>& ps) {
  ExactCoord m = ps.front().y;
  for (const auto& p : ps)
    if (p.y < m) m = p.y;
  return m;
}

ExactCoord max_y(const std::vector<Point>& ps) {
  ExactCoord m = ps.front().y;
  for (const auto& p : ps)
    if (p.y > m) m = p.y;
  return m;
}

long integer_above(const ExactCoord& v) {
  long k = floor_of(v.enclosure(128).second) + 1;
  while (exact_int(k) <= v) ++k;
  while (exact_int(k - 1) > v) --k;
  return k;
}

ExactCoord stack_offset(const std::vector<Point>& bottom, const std::vector<Point>& top) {
  ExactCoord lo = min_x(bottom), hi = max_x(bottom);
  ExactCoord tlo = min_x(top), thi = max_x(top);
  if (tlo < lo) lo = tlo;
  if (thi > hi) hi = thi;
  ExactCoord need = max_y(bottom) - min_y(top) + (hi - lo);
  return exact_int(integer_above(need) + 1);
}

}  // namespace slopes
