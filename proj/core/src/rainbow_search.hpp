#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "rvc/check.hpp"
#include "rvc/coloring.hpp"

namespace rvc::detail {

using ColorSet = std::uint64_t;

/// Visited set over (vertex, color-set) states. Small palettes use a dense
/// stamped table, larger ones a hash set.
class StateSet {
 public:
  void reset(int n, int palette);
  /// True if the state was not present before.
  bool insert(Vertex v, ColorSet mask);

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Vertex, ColorSet>& k) const noexcept {
      return std::hash<ColorSet>{}(k.second * 0x9E3779B97F4A7C15ull ^ static_cast<ColorSet>(k.first));
    }
  };

  bool dense_ = false;
  int palette_ = 0;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::unordered_set<std::pair<Vertex, ColorSet>, KeyHash> sparse_;
};

/// State-space search for rainbow paths: a state is the current vertex and
/// the set of colors already used by internal vertices. Because internal
/// colors are distinct, internal vertices are distinct as well, so every
/// accepted walk is a simple path and the state fully determines what can
/// still be reached. Depth is bounded by the palette size (+1 edge).
class RainbowSearch {
 public:
  RainbowSearch(const Graph& g, std::span<const Color> colors);
  /// Starts with every vertex uncolored; colors are filled in via set_color.
  RainbowSearch(const Graph& g, int palette);

  void recolor(std::span<const Color> colors);
  void set_color(Vertex v, Color c) noexcept { bit_[v] = c > 0 ? ColorSet{1} << (c - 1) : 0; }

  /// Restricts internal vertices to those with allowed[v] != 0; nullptr lifts it.
  void restrict_internal(const std::vector<char>* allowed) noexcept { allowed_ = allowed; }

  bool connects(Vertex s, Vertex t);

  /// reached[t] = 1 for every t != s joined to s by a rainbow path.
  void reachable_from(Vertex s, std::vector<char>& reached);

  std::optional<Path> shortest_lex_path(Vertex s, Vertex t);

 private:
  struct State {
    Vertex v;
    ColorSet used;
  };

  bool usable(Vertex w) const noexcept {
    return bit_[w] != 0 && (allowed_ == nullptr || (*allowed_)[w] != 0);
  }

  bool extend_lex(Vertex v, ColorSet used, Vertex s, Vertex t, int remaining, std::vector<Vertex>& trail);

  const Graph* g_;
  int palette_ = 0;
  std::vector<ColorSet> bit_;  // indexed by vertex, 0 = may not be internal
  const std::vector<char>* allowed_ = nullptr;
  StateSet visited_;
  std::vector<State> queue_;
  std::vector<std::vector<std::pair<ColorSet, int>>> failed_;  // per vertex: (used, remaining) dead ends
};

/// Palette size check shared by all public entry points.
void require_palette_fits(int palette, const char* what);

}  // namespace rvc::detail
