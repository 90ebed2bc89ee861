#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace rvc {

/// Vertices are dense 1-based ids.
using Vertex = int;

/// An unordered vertex pair. Canonical form has u < v.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  VertexPair canonical() const noexcept { return u < v ? *this : VertexPair{v, u}; }

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Simple undirected graph on vertices 1..n.
///
/// Immutable after construction. Edges are stored in canonical order
/// (lexicographic, u < v) together with sorted adjacency lists and a packed
/// adjacency matrix for O(1) adjacency tests.
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    const auto bit = static_cast<std::size_t>(v);
    return (matrix_[static_cast<std::size_t>(u) * words_ + bit / 64] >> (bit % 64)) & 1u;
  }

  /// Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }
  int degree(Vertex v) const noexcept { return static_cast<int>(adjacency_[v].size()); }

  const std::vector<VertexPair>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(int n, std::span<const VertexPair> edges);

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // index 0 unused
  std::vector<std::uint64_t> matrix_;
};

/// Builds a graph from an edge list. Pairs are unordered and deduplicated.
/// Throws InvalidInput on n < 1, self-loops and out-of-range endpoints.
Graph build_graph(int n, std::span<const VertexPair> edges);

inline Graph build_graph(int n, std::initializer_list<VertexPair> edges) {
  return build_graph(n, std::span<const VertexPair>(edges.begin(), edges.size()));
}

/// Copy of g with one more edge.
Graph with_edge(const Graph& g, VertexPair e);

struct GraphMetrics {
  bool connected = false;
  /// nullopt encodes an infinite diameter (disconnected graph).
  std::optional<int> diameter;
  int min_degree = 0;
  bool is_complete = false;
};

GraphMetrics graph_metrics(const Graph& g);

/// BFS distances from source; -1 marks unreachable. Indexed by vertex, slot 0 unused.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Row-major (n+1)x(n+1) hop-distance table, -1 for unreachable.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);

  int operator()(Vertex u, Vertex v) const noexcept {
    return dist_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v)];
  }

 private:
  std::size_t stride_;
  std::vector<int> dist_;
};

bool is_connected(const Graph& g);

/// Throws InvalidInput naming `what` when g is disconnected.
void require_connected(const Graph& g, const char* what);

// Named families used throughout tests and the acceptance suite.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

}  // namespace rvc
