#pragma once

#include <optional>
#include <vector>

#include "rvc/coloring.hpp"

namespace rvc::detail {

/// A two-coloring question: every `required` pair needs a rainbow path and
/// every `must_differ` pair needs distinct colors.
struct TwoColorProblem {
  const Graph* graph = nullptr;
  std::vector<VertexPair> required;
  std::vector<VertexPair> must_differ;
  bool pin_leaves = true;
  bool break_symmetry = true;
};

/// With two colors a rainbow path has at most two internal vertices, so a pair
/// at distance <= 2 is always fine, a pair at distance >= 4 never is, and a
/// pair (u, v) at distance 3 is fine iff some middle edge a-b of a u-a-b-v
/// path is bichromatic. That disjunction becomes one clause over per-edge
/// "bichromatic" indicators, and the clause set is decided by ClauseSolver.
///
/// Returns the lexicographically least valid coloring (vertex order, color 1
/// before 2), which is also the first one in restricted-growth order.
std::optional<std::vector<Color>> solve_two_color(const TwoColorProblem& problem);

/// Same question answered by enumerating all 2^n colorings in lexicographic
/// order; no pruning at all.
std::optional<std::vector<Color>> enumerate_two_color(const TwoColorProblem& problem);

}  // namespace rvc::detail
