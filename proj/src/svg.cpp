#include "slopes/svg.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "slopes/errors.hpp"

namespace slopes {

std::string drawing_to_svg(const Graph& g, const Drawing& d) {
  if (static_cast<int>(d.positions.size()) != g.vertex_count())
    throw PreconditionViolation("drawing has " +
                                std::to_string(d.positions.size()) +
                                " positions for " +
                                std::to_string(g.vertex_count()) + " vertices");

  const double size = 1024;
  const double margin = 64;

  std::vector<std::pair<double, double>> approx;
  approx.reserve(d.positions.size());
  for (const Point& p : d.positions)
    approx.push_back({p.x.to_double(), p.y.to_double()});

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    const auto& [x, y] = approx[i];
    if (i == 0) {
      min_x = max_x = x;
      min_y = max_y = y;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  const double span =
      std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = (size - 2 * margin) / span;
  const double off_x = (size - 2 * margin - (max_x - min_x) * scale) / 2;
  const double off_y = (size - 2 * margin - (max_y - min_y) * scale) / 2;
  auto sx = [&](double x) { return margin + off_x + (x - min_x) * scale; };
  // Flip the vertical axis so larger y draws higher, matching the geometry.
  auto sy = [&](double y) { return size - margin - off_y - (y - min_y) * scale; };

  static const std::array<const char*, 6> palette = {
      "#2563eb", "#dc2626", "#16a34a", "#9333ea", "#ea580c", "#0891b2"};

  std::ostringstream out;
  out.precision(3);
  out << std::fixed;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << size
      << " " << size << "\">\n";
  out << "  <rect width=\"" << size << "\" height=\"" << size
      << "\" fill=\"#ffffff\"/>\n";
  for (const auto& [u, v] : g.edges()) {
    const char* color = "#6b7280";
    for (std::size_t s = 0; s < d.slopes.size(); ++s)
      if (segment_has_slope(d.positions[u], d.positions[v], d.slopes[s])) {
        color = palette[s % palette.size()];
        break;
      }
    out << "  <line x1=\"" << sx(approx[u].first) << "\" y1=\""
        << sy(approx[u].second) << "\" x2=\"" << sx(approx[v].first)
        << "\" y2=\"" << sy(approx[v].second) << "\" stroke=\"" << color
        << "\" stroke-width=\"2.5\" stroke-linecap=\"round\"/>\n";
  }
  for (const auto& [x, y] : approx)
    out << "  <circle cx=\"" << sx(x) << "\" cy=\"" << sy(y)
        << "\" r=\"5\" fill=\"#111827\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace slopes
