#include "rvc/check.hpp"

#include <algorithm>
#include <string>

#include "rainbow_search.hpp"
#include "rvc/errors.hpp"

namespace rvc {

PairSet::PairSet(std::vector<VertexPair> pairs) {
  for (auto& p : pairs) {
    if (p.u == p.v) throw InvalidInput("reflexive pair (" + std::to_string(p.u) + "," + std::to_string(p.v) + ")");
    p = p.canonical();
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  pairs_ = std::move(pairs);
}

PairSet PairSet::all_pairs(int n) {
  std::vector<VertexPair> pairs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) pairs.push_back({u, v});
  return PairSet(std::move(pairs));
}

bool PairSet::contains(VertexPair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p.canonical());
}

namespace {

void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (!g.contains(v)) {
    throw InvalidInput(std::string(what) + ": vertex " + std::to_string(v) + " outside 1.." +
                       std::to_string(g.order()));
  }
}

void require_simple_path(const Graph& g, const Path& q) {
  if (q.vertices.empty()) throw InvalidInput("path has no vertices");
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < q.vertices.size(); ++i) {
    const Vertex v = q.vertices[i];
    require_vertex(g, v, "path");
    if (seen[v]) throw InvalidInput("path repeats vertex " + std::to_string(v));
    seen[v] = 1;
    if (i > 0 && !g.adjacent(q.vertices[i - 1], v)) {
      throw InvalidInput("path uses non-edge (" + std::to_string(q.vertices[i - 1]) + "," + std::to_string(v) + ")");
    }
  }
}

// Pairs at distance 1 never need colors; distance 2 needs one colored
// internal vertex, which exists whenever the palette is non-empty.
int trivially_connected_radius(const Coloring& c) { return c.palette_size() > 0 ? 2 : 1; }

}  // namespace

bool is_rainbow_path(const ColoredGraph& cg, const Path& q) {
  require_simple_path(cg.graph(), q);
  const auto& c = cg.coloring();
  std::vector<char> used(static_cast<std::size_t>(c.palette_size()) + 1, 0);
  for (std::size_t i = 1; i + 1 < q.vertices.size(); ++i) {
    const Color col = c[q.vertices[i]];
    if (col == 0 || used[col]) return false;
    used[col] = 1;
  }
  return true;
}

PathVerdict find_rainbow_path(const ColoredGraph& cg, Vertex s, Vertex t) {
  const auto& g = cg.graph();
  require_vertex(g, s, "find_rainbow_path");
  require_vertex(g, t, "find_rainbow_path");
  if (s == t) throw InvalidInput("find_rainbow_path: s and t must differ");
  detail::require_palette_fits(cg.coloring().palette_size(), "find_rainbow_path");
  require_connected(g, "find_rainbow_path");

  detail::RainbowSearch search(g, cg.coloring().colors());
  auto path = search.shortest_lex_path(s, t);
  if (!path) return {false, std::nullopt};
  return {true, std::move(path)};
}

PairVerdict check_rainbow_vertex_connected(const ColoredGraph& cg) {
  const auto& g = cg.graph();
  detail::require_palette_fits(cg.coloring().palette_size(), "check_rainbow_vertex_connected");
  require_connected(g, "check_rainbow_vertex_connected");

  const DistanceTable dist(g);
  const int radius = trivially_connected_radius(cg.coloring());
  detail::RainbowSearch search(g, cg.coloring().colors());
  std::vector<char> reached;
  for (Vertex s = 1; s <= g.order(); ++s) {
    bool needs_search = false;
    for (Vertex t = s + 1; t <= g.order() && !needs_search; ++t) needs_search = dist(s, t) > radius;
    if (!needs_search) continue;
    search.reachable_from(s, reached);
    for (Vertex t = s + 1; t <= g.order(); ++t) {
      if (!reached[t]) return {false, VertexPair{s, t}};
    }
  }
  return {true, std::nullopt};
}

PairVerdict check_pairs(const ColoredGraph& cg, const PairSet& pairs) {
  const auto& g = cg.graph();
  for (const auto& p : pairs.pairs()) {
    require_vertex(g, p.u, "check_pairs");
    require_vertex(g, p.v, "check_pairs");
  }
  detail::require_palette_fits(cg.coloring().palette_size(), "check_pairs");
  detail::RainbowSearch search(g, cg.coloring().colors());
  for (const auto& p : pairs.pairs()) {
    if (!search.connects(p.u, p.v)) return {false, p};
  }
  return {true, std::nullopt};
}

PathVerdict naive_all_paths_check(const ColoredGraph& cg, Vertex s, Vertex t) {
  const auto& g = cg.graph();
  if (g.order() > kMaxNaiveOrder) {
    throw SizeLimitError("naive_all_paths_check: " + std::to_string(g.order()) + " vertices exceeds limit " +
                         std::to_string(kMaxNaiveOrder));
  }
  require_vertex(g, s, "naive_all_paths_check");
  require_vertex(g, t, "naive_all_paths_check");
  if (s == t) throw InvalidInput("naive_all_paths_check: s and t must differ");

  // Plain DFS over all simple s-t paths; each complete path is judged by
  // is_rainbow_path alone. Ascending neighbor order visits paths
  // lexicographically, so the first hit of each length is the least one.
  std::optional<Path> best;
  std::vector<char> on_path(static_cast<std::size_t>(g.order()) + 1, 0);
  Path current{{s}};
  on_path[s] = 1;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (on_path[w]) continue;
      current.vertices.push_back(w);
      if (w == t) {
        if ((!best || current.length() < best->length()) && is_rainbow_path(cg, current)) best = current;
      } else {
        on_path[w] = 1;
        self(self, w);
        on_path[w] = 0;
      }
      current.vertices.pop_back();
    }
  };
  dfs(dfs, s);
  if (!best) return {false, std::nullopt};
  return {true, std::move(best)};
}

}  // namespace rvc
