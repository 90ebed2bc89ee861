#pragma once

#include <optional>
#include <vector>

#include "rvc/coloring.hpp"

namespace rvc {

/// Simple path v_0 .. v_p given by its vertex sequence.
struct Path {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Set of unordered pairs of distinct vertices, kept canonical and sorted.
class PairSet {
 public:
  PairSet() = default;
  /// Throws InvalidInput on reflexive pairs. Duplicates collapse.
  explicit PairSet(std::vector<VertexPair> pairs);

  static PairSet all_pairs(int n);

  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(VertexPair p) const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::vector<VertexPair> pairs_;
};

struct PathVerdict {
  bool holds = false;
  /// Shortest, then lexicographically least, rainbow path when holds.
  std::optional<Path> witness;
};

struct PairVerdict {
  bool holds = false;
  /// Lexicographically least pair without a rainbow path when !holds.
  std::optional<VertexPair> failing_pair;
};

/// Color sets are 64-bit masks, so palettes are capped here.
inline constexpr int kMaxPalette = 64;
inline constexpr int kMaxNaiveOrder = 10;

/// True iff the internal vertices of q carry pairwise distinct colors;
/// endpoint colors are ignored. Throws InvalidInput if q is not a simple path.
bool is_rainbow_path(const ColoredGraph& cg, const Path& q);

/// Exact s-t decision by search over (vertex, used-color-set) states.
/// Throws InvalidInput for s == t, out-of-range ids or a disconnected graph,
/// SizeLimitError for palettes above kMaxPalette.
PathVerdict find_rainbow_path(const ColoredGraph& cg, Vertex s, Vertex t);

/// Whole-graph check: every unordered pair joined by a rainbow path.
PairVerdict check_rainbow_vertex_connected(const ColoredGraph& cg);

/// Only the listed pairs need rainbow paths. Pairs in different components fail.
PairVerdict check_pairs(const ColoredGraph& cg, const PairSet& pairs);

/// Independent oracle: enumerates every simple s-t path. n <= kMaxNaiveOrder.
PathVerdict naive_all_paths_check(const ColoredGraph& cg, Vertex s, Vertex t);

}  // namespace rvc
