#include "slopes/fmax.hpp"

#include <sstream>

#include "slopes/errors.hpp"
#include "slopes/rational.hpp"

namespace slopes {

int supercycle_size_bound(int n, int girth) {
  if (n < 1 || girth < 3) throw InternalError("bound needs n >= 1 and girth >= 3");
  return 2 * ceil_log2_rational(Int(n + 1), Int(girth)) + girth - 1;
}

int max_girth_bound(int n) {
  if (n < 1) throw InternalError("max_girth_bound needs n >= 1");
  // Largest g with 3 * (2^(g/2) - 1) <= n, written as 2*ceil(log2(n/3 + 1)).
  return 2 * ceil_log2_rational(Int(n + 3), Int(3));
}

std::array<int, 4> supercycle_bound_table(int n) {
  if (n < 4 || n % 2 != 0)
    throw PreconditionViolation("bound table rows exist for even n >= 4 only");
  int mg = max_girth_bound(n);
  if (mg < 3) return {n, -4, mg, 0};
  int best = -1, best_girth = 0;
  for (int g = 3; g <= mg; ++g) {
    int s = supercycle_size_bound(n, g);
    if (s > best) {
      best = s;
      best_girth = g;
    }
  }
  return {n, 2 * best - 2, mg, best_girth};
}

std::vector<std::array<int, 4>> bound_table(int max_n) {
  std::vector<std::array<int, 4>> rows;
  for (int n = 6; n <= max_n; n += 2) rows.push_back(supercycle_bound_table(n));
  return rows;
}

std::string format_bound_table(const std::vector<std::array<int, 4>>& rows) {
  std::ostringstream out;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << "[" << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << "]";
    if (i + 1 < rows.size()) out << ",";
    if ((i + 1) % 5 == 0 || i + 1 == rows.size())
      out << "\n";
    else
      out << " ";
  }
  return out.str();
}

}  // namespace slopes
