#include "two_color.hpp"

#include <algorithm>
#include <map>

#include "clause_solver.hpp"
#include "rainbow_search.hpp"

namespace rvc::detail {

namespace {

std::vector<char> pinned_leaves(const TwoColorProblem& p) {
  const Graph& g = *p.graph;
  std::vector<char> pinned(static_cast<std::size_t>(g.order()) + 1, 0);
  if (!p.pin_leaves) return pinned;
  for (Vertex v = 1; v <= g.order(); ++v) pinned[v] = g.degree(v) == 1;
  for (const auto& d : p.must_differ) pinned[d.u] = pinned[d.v] = 0;
  return pinned;
}

}  // namespace

std::optional<std::vector<Color>> solve_two_color(const TwoColorProblem& problem) {
  const Graph& g = *problem.graph;
  const int n = g.order();
  ClauseSolver solver;
  for (Vertex v = 1; v <= n; ++v) solver.new_var();  // var v-1 true <=> color 2
  auto vertex_var = [](Vertex v) { return v - 1; };

  std::map<VertexPair, int> bichromatic;  // middle edge -> indicator var
  auto indicator = [&](VertexPair e) {
    e = e.canonical();
    auto it = bichromatic.find(e);
    if (it != bichromatic.end()) return it->second;
    const int y = solver.new_var();
    const int a = vertex_var(e.u), b = vertex_var(e.v);
    solver.add_clause({neg_lit(y), pos_lit(a), pos_lit(b)});
    solver.add_clause({neg_lit(y), neg_lit(a), neg_lit(b)});
    bichromatic.emplace(e, y);
    return y;
  };

  if (!problem.required.empty()) {
    const DistanceTable dist(g);
    std::vector<Lit> clause;
    for (const auto& pair : problem.required) {
      const int d = dist(pair.u, pair.v);
      if (d >= 0 && d <= 2) continue;
      if (d != 3) return std::nullopt;
      clause.clear();
      for (Vertex a : g.neighbors(pair.u)) {
        for (Vertex b : g.neighbors(a)) {
          if (b != pair.u && g.adjacent(b, pair.v)) clause.push_back(pos_lit(indicator({a, b})));
        }
      }
      if (!solver.add_clause(clause)) return std::nullopt;
    }
  }
  for (const auto& d : problem.must_differ) {
    if (d.u == d.v) return std::nullopt;
    solver.add_clause({pos_lit(vertex_var(d.u)), pos_lit(vertex_var(d.v))});
    if (!solver.add_clause({neg_lit(vertex_var(d.u)), neg_lit(vertex_var(d.v))})) return std::nullopt;
  }

  const auto pinned = pinned_leaves(problem);
  for (Vertex v = 1; v <= n; ++v) {
    if (pinned[v] && !solver.add_clause({neg_lit(vertex_var(v))})) return std::nullopt;
  }
  if (problem.break_symmetry) {
    // Swapping the two colors on all unpinned vertices preserves validity.
    for (Vertex v = 1; v <= n; ++v) {
      if (pinned[v]) continue;
      if (!solver.add_clause({neg_lit(vertex_var(v))})) return std::nullopt;
      break;
    }
  }

  if (!solver.solve()) return std::nullopt;

  // Fix colors greedily in vertex order, preferring color 1; the current
  // model always witnesses that the fixed prefix extends.
  std::vector<bool> model(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) model[static_cast<std::size_t>(v) - 1] = solver.model_value(vertex_var(v));
  for (Vertex v = 1; v <= n; ++v) {
    const auto idx = static_cast<std::size_t>(v) - 1;
    if (model[idx]) {
      const Lit try_first = neg_lit(vertex_var(v));
      if (solver.solve(std::span<const Lit>(&try_first, 1))) {
        for (Vertex w = 1; w <= n; ++w) model[static_cast<std::size_t>(w) - 1] = solver.model_value(vertex_var(w));
      }
    }
    solver.add_clause({model[idx] ? pos_lit(vertex_var(v)) : neg_lit(vertex_var(v))});
  }

  std::vector<Color> colors(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = model[i] ? 2 : 1;
  return colors;
}

std::optional<std::vector<Color>> enumerate_two_color(const TwoColorProblem& problem) {
  const Graph& g = *problem.graph;
  const int n = g.order();
  std::vector<Color> colors(static_cast<std::size_t>(n), 1);
  RainbowSearch search(g, colors);
  for (;;) {
    bool ok = std::all_of(problem.must_differ.begin(), problem.must_differ.end(), [&](const VertexPair& d) {
      return colors[static_cast<std::size_t>(d.u) - 1] != colors[static_cast<std::size_t>(d.v) - 1];
    });
    if (ok) {
      search.recolor(colors);
      ok = std::all_of(problem.required.begin(), problem.required.end(),
                       [&](const VertexPair& p) { return search.connects(p.u, p.v); });
    }
    if (ok) return colors;
    // Odometer step, last vertex fastest.
    int i = n - 1;
    while (i >= 0 && colors[static_cast<std::size_t>(i)] == 2) colors[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return std::nullopt;
    colors[static_cast<std::size_t>(i)] = 2;
  }
}

}  // namespace rvc::detail
