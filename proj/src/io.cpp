#include "slopes/io.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "slopes/errors.hpp"

namespace slopes {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string trimmed(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<long> parse_ints(const std::string& line, int line_no,
                             std::size_t expect) {
  std::istringstream in(line);
  std::vector<long> out;
  long v = 0;
  while (in >> v) out.push_back(v);
  std::string rest;
  if (in.clear(), in >> rest)
    throw ParseError("line " + std::to_string(line_no) +
                     ": unexpected token '" + rest + "'");
  if (out.size() != expect)
    throw ParseError("line " + std::to_string(line_no) + ": expected " +
                     std::to_string(expect) + " integers, found " +
                     std::to_string(out.size()));
  return out;
}

nlohmann::json coord_to_json(const ExactCoord& c) {
  auto obj = nlohmann::json::object();
  for (const auto& [index, q] : c.terms())
    obj[std::to_string(index)] = format_rational(q);
  return obj;
}

ExactCoord coord_from_json(const nlohmann::json& obj) {
  if (!obj.is_object()) throw ParseError("coordinate is not an object");
  ExactCoord c;
  for (const auto& [key, value] : obj.items()) {
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(key, &used);
      if (used != key.size() || index < 0) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("bad basis index '" + key + "'");
    }
    c += ExactCoord::basis(index) *
         parse_rational(value.get<std::string>());
  }
  return c;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  long n = -1;
  long m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    if (n < 0) {
      auto header = parse_ints(line, line_no, 2);
      n = header[0];
      m = header[1];
      if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": negative count");
      continue;
    }
    if (static_cast<long>(edges.size()) == m)
      throw ParseError("line " + std::to_string(line_no) +
                       ": more than the declared " + std::to_string(m) +
                       " edges");
    auto pair = parse_ints(line, line_no, 2);
    if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n)
      throw ParseError("line " + std::to_string(line_no) +
                       ": endpoint out of range");
    edges.push_back({static_cast<int>(pair[0]), static_cast<int>(pair[1])});
  }
  if (n < 0) throw ParseError("line 1: missing \"n m\" header");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError("line " + std::to_string(line_no) + ": declared " +
                     std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph parse_graph6(const std::string& line) {
  std::string data = trimmed(line);
  const std::string header = ">>graph6<<";
  if (data.rfind(header, 0) == 0) data = data.substr(header.size());
  if (data.empty()) throw ParseError("empty graph6 line");

  std::size_t pos = 0;
  auto next = [&]() -> long {
    if (pos >= data.size())
      throw ParseError("graph6 line truncated at byte " + std::to_string(pos));
    const unsigned char c = static_cast<unsigned char>(data[pos]);
    if (c < 63 || c > 126)
      throw ParseError("invalid graph6 byte at position " +
                       std::to_string(pos));
    ++pos;
    return c - 63;
  };

  long n = 0;
  if (data[0] == '~') {
    ++pos;
    if (pos < data.size() && data[pos] == '~')
      throw ParseError("graph6 size beyond the supported range");
    const long a = next();
    const long b = next();
    const long c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next();
  }

  std::vector<std::pair<int, int>> edges;
  long buffer = 0;
  int bits = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      if (bits == 0) {
        buffer = next();
        bits = 6;
      }
      if (buffer & (1L << (bits - 1)))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
      --bits;
    }
  }
  if (pos != data.size())
    throw ParseError("trailing bytes after graph6 data");
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= (1L << 18) - 1) {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw PreconditionViolation("graph too large for the graph6 writer");
  }
  int buffer = 0;
  int bits = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      buffer = (buffer << 1) |
               (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + buffer));
        buffer = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0)
    out.push_back(static_cast<char>(63 + (buffer << (6 - bits))));
  return out;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    for (char c : line)
      if (c == ' ' || c == '\t' ||
          std::isdigit(static_cast<unsigned char>(c)))
        return parse_edge_list(text);
    return parse_graph6(line);
  }
  throw ParseError("line 1: empty input");
}

std::string drawing_to_json(const Graph& g, const Drawing& d) {
  if (static_cast<int>(d.positions.size()) != g.vertex_count())
    throw PreconditionViolation("drawing has " +
                                std::to_string(d.positions.size()) +
                                " positions for " +
                                std::to_string(g.vertex_count()) + " vertices");
  nlohmann::json j;
  j["mode"] = d.mode == Drawing::Mode::Basic ? "basic" : "four";
  auto vertices = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Point& p = d.positions[v];
    vertices.push_back({{"id", v},
                        {"x", coord_to_json(p.x)},
                        {"y", coord_to_json(p.y)},
                        {"approx", {p.x.to_double(), p.y.to_double()}}});
  }
  j["vertices"] = std::move(vertices);
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  auto slopes = nlohmann::json::array();
  for (const Slope& s : d.slopes)
    slopes.push_back(s.vertical ? std::string("vertical")
                                : format_rational(s.tangent));
  j["slopes"] = std::move(slopes);
  return j.dump(2) + "\n";
}

ParsedDrawing drawing_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ParsedDrawing out;

    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "basic")
      out.drawing.mode = Drawing::Mode::Basic;
    else if (mode == "four")
      out.drawing.mode = Drawing::Mode::Four;
    else
      throw ParseError("unknown mode '" + mode + "'");

    const auto& vertices = j.at("vertices");
    if (!vertices.is_array()) throw ParseError("vertices is not an array");
    const int n = static_cast<int>(vertices.size());
    out.drawing.positions.assign(n, Point{});
    std::vector<char> seen(n, 0);
    for (const auto& entry : vertices) {
      const int id = entry.at("id").get<int>();
      if (id < 0 || id >= n || seen[id])
        throw ParseError("vertex ids must cover 0.." + std::to_string(n - 1) +
                         " exactly once");
      seen[id] = 1;
      out.drawing.positions[id] = {coord_from_json(entry.at("x")),
                                   coord_from_json(entry.at("y"))};
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("edges must be pairs");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    out.graph = Graph::from_edges(n, std::move(edges));

    for (const auto& s : j.at("slopes")) {
      const std::string text_slope = s.get<std::string>();
      out.drawing.slopes.push_back(
          text_slope == "vertical" ? Slope::vertical_slope()
                                   : Slope::of_tangent(parse_rational(text_slope)));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad drawing json: ") + e.what());
  }
}

}  // namespace slopes
