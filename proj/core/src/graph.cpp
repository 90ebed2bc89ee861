#include "rvc/graph.hpp"

#include <algorithm>
#include <string>

#include "rvc/errors.hpp"

namespace rvc {

Graph build_graph(int n, std::span<const VertexPair> edges) {
  if (n < 1) {
    throw InvalidInput("graph must have at least one vertex (got n=" + std::to_string(n) + ")");
  }
  Graph g;
  g.n_ = n;
  std::vector<VertexPair> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw InvalidInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") has an endpoint outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    }
    canon.push_back(e.canonical());
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  g.edges_ = std::move(canon);

  const auto slots = static_cast<std::size_t>(n) + 1;
  g.words_ = (slots + 63) / 64;
  g.matrix_.assign(slots * g.words_, 0);
  g.adjacency_.assign(slots, {});
  for (const auto& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
    g.matrix_[static_cast<std::size_t>(e.u) * g.words_ + static_cast<std::size_t>(e.v) / 64] |=
        std::uint64_t{1} << (e.v % 64);
    g.matrix_[static_cast<std::size_t>(e.v) * g.words_ + static_cast<std::size_t>(e.u) / 64] |=
        std::uint64_t{1} << (e.u % 64);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

Graph with_edge(const Graph& g, VertexPair e) {
  std::vector<VertexPair> edges = g.edges();
  edges.push_back(e);
  return build_graph(g.order(), edges);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()) + 1, -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.order()));
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceTable::DistanceTable(const Graph& g)
    : stride_(static_cast<std::size_t>(g.order()) + 1), dist_(stride_ * stride_, -1) {
  for (Vertex s = 1; s <= g.order(); ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * stride_));
  }
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const auto dist = bfs_distances(g, 1);
  return std::none_of(dist.begin() + 1, dist.end(), [](int d) { return d < 0; });
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw InvalidInput(std::string(what) + ": graph is not connected");
  }
}

GraphMetrics graph_metrics(const Graph& g) {
  GraphMetrics m;
  const int n = g.order();
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  m.is_complete = g.size() == pairs;
  m.min_degree = n == 0 ? 0 : g.degree(1);
  for (Vertex v = 2; v <= n; ++v) m.min_degree = std::min(m.min_degree, g.degree(v));

  int diameter = 0;
  bool connected = n > 0;
  for (Vertex s = 1; s <= n && connected; ++s) {
    const auto dist = bfs_distances(g, s);
    for (Vertex t = 1; t <= n; ++t) {
      if (dist[t] < 0) {
        connected = false;
        break;
      }
      diameter = std::max(diameter, dist[t]);
    }
  }
  m.connected = connected;
  if (connected) m.diameter = diameter;
  return m;
}

Graph complete_graph(int n) {
  std::vector<VertexPair> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return build_graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<VertexPair> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return build_graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<VertexPair> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({n, 1});
  return build_graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<VertexPair> edges;
  for (Vertex v = 2; v <= leaves + 1; ++v) edges.push_back({1, v});
  return build_graph(leaves + 1, edges);
}

Graph petersen_graph() {
  // Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram 6..10.
  std::vector<VertexPair> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({1 + i, 1 + (i + 1) % 5});
    edges.push_back({1 + i, 6 + i});
    edges.push_back({6 + i, 6 + (i + 2) % 5});
  }
  return build_graph(10, edges);
}

}  // namespace rvc
