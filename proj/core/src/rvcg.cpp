#include "rvc/rvcg.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "rvc/errors.hpp"

namespace rvc {
namespace text {

std::vector<std::string_view> tokenize(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace text

ColoredGraph parse_colored_graph(std::string_view text) {
  int n = -1, m = -1, k = -1;
  int last_line = 0;
  std::vector<VertexPair> edges;
  std::set<VertexPair> seen_edges;
  std::vector<Color> colors;
  int colored = 0;

  text::for_each_line(text, [&](int line, const std::vector<std::string_view>& tok) {
    last_line = line;
    if (n < 0) {
      if (tok.size() != 5 || tok[0] != "p" || tok[1] != "rvcg") {
        throw ParseError(line, "expected header 'p rvcg <n> <m> <k>'");
      }
      n = text::parse_int(tok[2], line);
      m = text::parse_int(tok[3], line);
      k = text::parse_int(tok[4], line);
      if (n < 1) throw ParseError(line, "vertex count must be at least 1");
      if (m < 0 || k < 0) throw ParseError(line, "edge count and palette size must be nonnegative");
      colors.assign(static_cast<std::size_t>(n), 0);
      return;
    }
    if (tok[0] == "e") {
      if (static_cast<int>(edges.size()) == m) throw ParseError(line, "more edge lines than declared");
      if (colored > 0) throw ParseError(line, "edge line after vertex lines");
      if (tok.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
      const Vertex u = text::parse_int(tok[1], line);
      const Vertex v = text::parse_int(tok[2], line);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line, "edge endpoint out of range");
      if (u == v) throw ParseError(line, "self-loop");
      if (!seen_edges.insert(VertexPair{u, v}.canonical()).second) {
        throw ParseError(line, "duplicate edge");
      }
      edges.push_back({u, v});
      return;
    }
    if (tok[0] == "v") {
      if (static_cast<int>(edges.size()) != m) throw ParseError(line, "vertex line before all edge lines");
      if (k == 0) throw ParseError(line, "vertex color given with empty palette");
      if (tok.size() != 3) throw ParseError(line, "expected 'v <vertex> <color>'");
      const Vertex v = text::parse_int(tok[1], line);
      const Color c = text::parse_int(tok[2], line);
      if (v < 1 || v > n) throw ParseError(line, "vertex id out of range");
      if (c < 1) throw ParseError(line, "color ids start at 1");
      if (c > k) {
        throw ParseError(line, "color " + std::to_string(c) + " exceeds palette " + std::to_string(k));
      }
      if (colors[static_cast<std::size_t>(v) - 1] != 0) throw ParseError(line, "vertex colored twice");
      colors[static_cast<std::size_t>(v) - 1] = c;
      ++colored;
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
  });

  if (n < 0) throw ParseError(last_line + 1, "missing header");
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(last_line + 1, "expected " + std::to_string(m) + " edge lines, found " +
                                        std::to_string(edges.size()));
  }
  if (k > 0 && colored != n) {
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (colors[i] == 0) {
        throw ParseError(last_line + 1, "missing color for vertex " + std::to_string(i + 1));
      }
    }
  }
  return ColoredGraph(build_graph(n, edges), Coloring(k, std::move(colors)));
}

std::string serialize_colored_graph(const ColoredGraph& cg) {
  const auto& g = cg.graph();
  const auto& c = cg.coloring();
  std::ostringstream out;
  out << "p rvcg " << g.order() << ' ' << g.size() << ' ' << c.palette_size() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  if (c.palette_size() > 0) {
    for (Vertex v = 1; v <= g.order(); ++v) out << "v " << v << ' ' << c[v] << '\n';
  }
  return out.str();
}

std::string serialize_graph(const Graph& g) {
  return serialize_colored_graph(ColoredGraph(g, Coloring::uncolored(g.order())));
}

std::vector<VertexPair> parse_pair_lines(std::string_view text) {
  std::vector<VertexPair> pairs;
  text::for_each_line(text, [&](int line, const std::vector<std::string_view>& tok) {
    if (tok.size() != 3 || tok[0] != "p") throw ParseError(line, "expected 'p <u> <v>'");
    pairs.push_back({text::parse_int(tok[1], line), text::parse_int(tok[2], line)});
  });
  return pairs;
}

std::string serialize_pair_lines(const std::vector<VertexPair>& pairs) {
  std::ostringstream out;
  for (const auto& p : pairs) out << "p " << p.u << ' ' << p.v << '\n';
  return out.str();
}

}  // namespace rvc
