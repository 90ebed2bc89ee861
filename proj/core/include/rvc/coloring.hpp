#pragma once

#include <span>
#include <vector>

#include "rvc/graph.hpp"

namespace rvc {

/// Colors are 1-based palette indices. 0 appears only in the empty
/// (palette size 0) assignment.
using Color = int;

/// Total vertex coloring with an explicit palette size k.
///
/// k = 0 is the "no colors" convention: every vertex carries 0 and no vertex
/// may serve as an internal vertex of a rainbow path. For k > 0 every vertex
/// carries a color in 1..k; not every palette color needs to be used.
class Coloring {
 public:
  Coloring() = default;

  /// colors[i] is the color of vertex i+1. Throws InvalidInput when a color
  /// is outside 1..k (or nonzero for k = 0).
  Coloring(int palette_size, std::vector<Color> colors);

  static Coloring uncolored(int vertex_count);
  static Coloring uniform(int vertex_count, int palette_size = 1);

  int palette_size() const noexcept { return palette_; }
  int vertex_count() const noexcept { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const noexcept { return colors_[static_cast<std::size_t>(v) - 1]; }
  std::span<const Color> colors() const noexcept { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int palette_ = 0;
  std::vector<Color> colors_;
};

/// A graph together with a coloring of exactly its vertex set.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  /// Throws InvalidInput if the coloring does not cover exactly 1..n.
  ColoredGraph(Graph graph, Coloring coloring);

  const Graph& graph() const noexcept { return graph_; }
  const Coloring& coloring() const noexcept { return coloring_; }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  Graph graph_;
  Coloring coloring_;
};

}  // namespace rvc
