#include "rvc/solve.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "rainbow_search.hpp"
#include "rvc/errors.hpp"
#include "two_color.hpp"

namespace rvc {

Pairing::Pairing(std::vector<Vertex> first, std::vector<Vertex> second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.size() != second_.size()) throw InvalidInput("pairing: lists differ in length");
  std::set<Vertex> seen;
  for (Vertex v : first_) {
    if (!seen.insert(v).second) throw InvalidInput("pairing: vertex " + std::to_string(v) + " repeated");
  }
  for (Vertex v : second_) {
    if (!seen.insert(v).second) {
      throw InvalidInput("pairing: vertex " + std::to_string(v) + " repeated or in both lists");
    }
  }
}

Pairing Pairing::from_pairs(const std::vector<VertexPair>& pairs) {
  std::vector<Vertex> a, b;
  for (const auto& p : pairs) {
    a.push_back(p.u);
    b.push_back(p.v);
  }
  return Pairing(std::move(a), std::move(b));
}

std::vector<VertexPair> Pairing::pairs() const {
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < first_.size(); ++i) out.push_back({first_[i], second_[i]});
  return out;
}

Bounds rvc_bounds(const Graph& g) {
  const GraphMetrics m = graph_metrics(g);
  if (!m.connected) throw InvalidInput("rvc_bounds: graph is disconnected");
  const int diam = *m.diameter;
  Bounds b;
  b.lower = std::max(0, diam - 1);
  b.upper = m.is_complete ? 0 : g.order() - 2;
  b.ky_bound = m.min_degree > 0 ? 11.0 * g.order() / m.min_degree : std::numeric_limits<double>::infinity();
  if (diam <= 2) b.exact = b.lower;
  return b;
}

namespace {

std::vector<char> leaf_pins(const Graph& g, bool enabled) {
  std::vector<char> pinned(static_cast<std::size_t>(g.order()) + 1, 0);
  if (!enabled) return pinned;
  for (Vertex v = 1; v <= g.order(); ++v) pinned[v] = g.degree(v) == 1;
  return pinned;
}

// Colors vertices 1..n in order. A pair at distance >= 3 can only route
// through vertices w with d(u,w) + d(w,v) <= k + 1, so it is settled once the
// largest such vertex is colored and gets checked right there.
class Backtracker {
 public:
  Backtracker(const Graph& g, int k, const SearchOptions& options)
      : g_(g), k_(k), symmetry_(options.break_symmetry), pinned_(leaf_pins(g, options.pin_leaves)),
        colors_(static_cast<std::size_t>(g.order()), 0), search_(g, k),
        checks_at_(static_cast<std::size_t>(g.order()) + 1) {}

  std::optional<std::vector<Color>> run() {
    const int n = g_.order();
    const DistanceTable dist(g_);
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        const int d = dist(u, v);
        if (d <= 2) continue;
        if (d > k_ + 1) return std::nullopt;
        Check c{u, v, std::vector<char>(static_cast<std::size_t>(n) + 1, 0)};
        Vertex trigger = 0;
        for (Vertex w = 1; w <= n; ++w) {
          if (w == u || w == v || g_.degree(w) < 2) continue;
          if (dist(u, w) + dist(w, v) <= k_ + 1) {
            c.relevant[w] = 1;
            trigger = w;
          }
        }
        checks_.push_back(std::move(c));
        checks_at_[trigger].push_back(checks_.size() - 1);
      }
    }
    if (!assign(1, 0)) return std::nullopt;
    return colors_;
  }

 private:
  struct Check {
    Vertex u, v;
    std::vector<char> relevant;
  };

  bool settled(Vertex v) {
    for (std::size_t idx : checks_at_[v]) {
      const Check& c = checks_[idx];
      search_.restrict_internal(&c.relevant);
      const bool ok = search_.connects(c.u, c.v);
      search_.restrict_internal(nullptr);
      if (!ok) return false;
    }
    return true;
  }

  bool place(Vertex v, Color c, int used) {
    colors_[static_cast<std::size_t>(v) - 1] = c;
    search_.set_color(v, c);
    if (settled(v) && assign(v + 1, used)) return true;
    search_.set_color(v, 0);
    return false;
  }

  bool assign(Vertex v, int used) {
    if (v > g_.order()) return true;
    if (pinned_[v]) return place(v, 1, used);
    const int top = symmetry_ ? std::min(k_, used + 1) : k_;
    for (Color c = 1; c <= top; ++c) {
      if (place(v, c, std::max(used, c))) return true;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  bool symmetry_;
  std::vector<char> pinned_;
  std::vector<Color> colors_;
  detail::RainbowSearch search_;
  std::vector<Check> checks_;
  std::vector<std::vector<std::size_t>> checks_at_;
};

// Reference route: every k^n coloring in lexicographic order, each checked in full.
std::optional<std::vector<Color>> enumerate_all(const Graph& g, int k) {
  const int n = g.order();
  std::vector<Color> colors(static_cast<std::size_t>(n), 1);
  for (;;) {
    if (check_rainbow_vertex_connected(ColoredGraph(g, Coloring(k, colors))).holds) return colors;
    int i = n - 1;
    while (i >= 0 && colors[static_cast<std::size_t>(i)] == k) colors[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return std::nullopt;
    ++colors[static_cast<std::size_t>(i)];
  }
}

void require_order(const Graph& g, int limit, const std::string& what) {
  if (g.order() > limit) {
    throw SizeLimitError(what + ": order " + std::to_string(g.order()) + " exceeds the supported " +
                         std::to_string(limit));
  }
}

bool unpruned(const SearchOptions& o) { return !o.break_symmetry && !o.pin_leaves; }

int two_color_limit(const SearchOptions& o) { return unpruned(o) ? kMaxUnprunedTwoColorOrder : kMaxTwoColorOrder; }

std::optional<std::vector<Color>> run_two_color(const detail::TwoColorProblem& p, const SearchOptions& o) {
  return unpruned(o) ? detail::enumerate_two_color(p) : detail::solve_two_color(p);
}

ColoringVerdict verdict(std::optional<std::vector<Color>> colors, int palette) {
  if (!colors) return {};
  return {true, Coloring(palette, std::move(*colors))};
}

void require_in_graph(const Graph& g, Vertex v, const char* what) {
  if (!g.contains(v)) throw InvalidInput(std::string(what) + ": vertex " + std::to_string(v) + " is not in the graph");
}

}  // namespace

ColoringVerdict decide_rvc_le_k(const Graph& g, int k, const SearchOptions& options) {
  require_connected(g, "decide_rvc_le_k");
  if (k < 0 || k > g.order()) {
    throw InvalidInput("decide_rvc_le_k: k = " + std::to_string(k) + " outside 0.." + std::to_string(g.order()));
  }
  const int n = g.order();
  ColoringVerdict result;
  if (k == 0) {
    if (graph_metrics(g).is_complete) result = {true, Coloring::uncolored(n)};
  } else if (k == 1) {
    const Coloring one = Coloring::uniform(n, 1);
    if (check_rainbow_vertex_connected(ColoredGraph(g, one)).holds) result = {true, one};
  } else if (k == 2) {
    require_order(g, two_color_limit(options), "decide_rvc_le_k with k = 2");
    detail::TwoColorProblem p{&g, PairSet::all_pairs(n).pairs(), {}, options.pin_leaves, options.break_symmetry};
    result = verdict(run_two_color(p, options), 2);
  } else {
    require_order(g, kMaxExactOrder, "decide_rvc_le_k with k >= 3");
    detail::require_palette_fits(k, "decide_rvc_le_k");
    result = verdict(unpruned(options) ? enumerate_all(g, k) : Backtracker(g, k, options).run(), k);
  }
  if (result.holds && !check_rainbow_vertex_connected(ColoredGraph(g, *result.witness)).holds) {
    throw std::logic_error("decide_rvc_le_k: witness failed verification");
  }
  return result;
}

RvcResult rvc_exact(const Graph& g) {
  const Bounds b = rvc_bounds(g);
  const int n = g.order();
  if (b.upper == 0) return {0, Coloring::uncolored(n)};
  if (b.exact) return {*b.exact, Coloring::uniform(n, *b.exact)};
  for (int k = b.lower; k <= b.upper; ++k) {
    ColoringVerdict v = decide_rvc_le_k(g, k);
    if (v.holds) return {k, std::move(*v.witness)};
  }
  throw std::logic_error("rvc_exact: no coloring within n - 2 colors");
}

ColoringVerdict decide_subset_rvc2(const Graph& g, const PairSet& pairs, const SearchOptions& options) {
  require_connected(g, "decide_subset_rvc2");
  for (const auto& p : pairs.pairs()) {
    require_in_graph(g, p.u, "decide_subset_rvc2");
    require_in_graph(g, p.v, "decide_subset_rvc2");
  }
  require_order(g, two_color_limit(options), "decide_subset_rvc2");
  detail::TwoColorProblem p{&g, pairs.pairs(), {}, options.pin_leaves, options.break_symmetry};
  ColoringVerdict result = verdict(run_two_color(p, options), 2);
  if (result.holds && !check_pairs(ColoredGraph(g, *result.witness), pairs).holds) {
    throw std::logic_error("decide_subset_rvc2: witness failed verification");
  }
  return result;
}

ColoringVerdict decide_diffpairs_rvc2(const Graph& g, const Pairing& pairing, const SearchOptions& options) {
  require_connected(g, "decide_diffpairs_rvc2");
  for (const auto& p : pairing.pairs()) {
    require_in_graph(g, p.u, "decide_diffpairs_rvc2");
    require_in_graph(g, p.v, "decide_diffpairs_rvc2");
  }
  require_order(g, two_color_limit(options), "decide_diffpairs_rvc2");
  detail::TwoColorProblem p{&g, PairSet::all_pairs(g.order()).pairs(), pairing.pairs(), options.pin_leaves,
                            options.break_symmetry};
  ColoringVerdict result = verdict(run_two_color(p, options), 2);
  if (result.holds) {
    const Coloring& c = *result.witness;
    const auto partners = pairing.pairs();
    const bool differ = std::all_of(partners.begin(), partners.end(),
                                    [&](const VertexPair& q) { return c[q.u] != c[q.v]; });
    if (!differ || !check_rainbow_vertex_connected(ColoredGraph(g, c)).holds) {
      throw std::logic_error("decide_diffpairs_rvc2: witness failed verification");
    }
  }
  return result;
}

}  // namespace rvc
