#pragma once

#include <optional>
#include <vector>

#include "rvc/check.hpp"
#include "rvc/coloring.hpp"

namespace rvc {

/// Disjoint vertex lists with the positional bijection first[i] -> second[i].
class Pairing {
 public:
  Pairing() = default;
  /// Throws InvalidInput on unequal lengths, repeats or overlap.
  Pairing(std::vector<Vertex> first, std::vector<Vertex> second);
  static Pairing from_pairs(const std::vector<VertexPair>& pairs);

  const std::vector<Vertex>& first() const noexcept { return first_; }
  const std::vector<Vertex>& second() const noexcept { return second_; }
  std::size_t size() const noexcept { return first_.size(); }
  VertexPair pair(std::size_t i) const { return {first_.at(i), second_.at(i)}; }
  std::vector<VertexPair> pairs() const;

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  std::vector<Vertex> first_;
  std::vector<Vertex> second_;
};

struct Bounds {
  int lower = 0;          ///< max(0, diam - 1)
  int upper = 0;          ///< n - 2 for non-complete graphs, 0 for complete ones
  double ky_bound = 0.0;  ///< 11 n / min-degree (strict upper bound)
  std::optional<int> exact;  ///< diam - 1 whenever diam <= 2
};

/// Throws InvalidInput for disconnected graphs.
Bounds rvc_bounds(const Graph& g);

/// Pruning switches for the exact searches; neither changes any verdict.
struct SearchOptions {
  /// Enumerate colorings once per palette permutation (restricted growth).
  bool break_symmetry = true;
  /// Degree-1 vertices never sit inside a simple path; fix them to color 1.
  bool pin_leaves = true;
};

struct ColoringVerdict {
  bool holds = false;
  /// First valid coloring in canonical order when holds.
  std::optional<Coloring> witness;
};

inline constexpr int kMaxTwoColorOrder = 512;
inline constexpr int kMaxUnprunedTwoColorOrder = 24;
inline constexpr int kMaxExactOrder = 12;

/// rvc(G) <= k. Exact. k = 2 runs a clause-learning search over two-colorings,
/// other k a restricted-growth backtracking search that discards a partial
/// coloring as soon as some pair is fully determined and fails. With both
/// prunings disabled every k^n coloring is enumerated instead.
ColoringVerdict decide_rvc_le_k(const Graph& g, int k, const SearchOptions& options = {});

struct RvcResult {
  int value = 0;
  Coloring witness;
};

/// Smallest k with decide_rvc_le_k(g, k), scanning upward from the diameter bound.
RvcResult rvc_exact(const Graph& g);

/// Two colors, only the pairs in `pairs` need rainbow paths.
ColoringVerdict decide_subset_rvc2(const Graph& g, const PairSet& pairs, const SearchOptions& options = {});

/// Two colors, whole graph rainbow vertex-connected, and every pairing
/// partner gets a different color.
ColoringVerdict decide_diffpairs_rvc2(const Graph& g, const Pairing& pairing, const SearchOptions& options = {});

}  // namespace rvc
