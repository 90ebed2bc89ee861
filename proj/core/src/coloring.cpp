#include "rvc/coloring.hpp"

#include <string>

#include "rvc/errors.hpp"

namespace rvc {

Coloring::Coloring(int palette_size, std::vector<Color> colors)
    : palette_(palette_size), colors_(std::move(colors)) {
  if (palette_ < 0) throw InvalidInput("palette size must be nonnegative");
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    const Color c = colors_[i];
    const bool ok = palette_ == 0 ? c == 0 : (c >= 1 && c <= palette_);
    if (!ok) {
      throw InvalidInput("vertex " + std::to_string(i + 1) + " has color " + std::to_string(c) +
                         " outside palette of size " + std::to_string(palette_));
    }
  }
}

Coloring Coloring::uncolored(int vertex_count) {
  return Coloring(0, std::vector<Color>(static_cast<std::size_t>(vertex_count), 0));
}

Coloring Coloring::uniform(int vertex_count, int palette_size) {
  return Coloring(palette_size, std::vector<Color>(static_cast<std::size_t>(vertex_count), 1));
}

ColoredGraph::ColoredGraph(Graph graph, Coloring coloring)
    : graph_(std::move(graph)), coloring_(std::move(coloring)) {
  if (coloring_.vertex_count() != graph_.order()) {
    throw InvalidInput("coloring covers " + std::to_string(coloring_.vertex_count()) +
                       " vertices but the graph has " + std::to_string(graph_.order()));
  }
}

}  // namespace rvc
