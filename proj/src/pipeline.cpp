#include "slopes/pipeline.hpp"

#include "slopes/cubic_drawer.hpp"
#include "slopes/errors.hpp"
#include "slopes/graph_algos.hpp"
#include "slopes/matching_drawer.hpp"

namespace slopes {

Drawing draw_any(const Graph& g) {
  try {
    return draw_cubic_basic(g);
  } catch (const Fallback&) {
    if (!is_connected(g)) throw;
  }
  if (auto tri = find_triangle(g)) {
    const auto rec = contract_triangle(g, *tri);
    return expand_triangle(draw_any(rec.contracted), rec);
  }
  return draw_cubic_four(g);
}

}  // namespace slopes
