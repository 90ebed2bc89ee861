#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rvc/cnf.hpp"
#include "rvc/graph.hpp"

namespace rvc {

inline constexpr int kMaxEnumeratedOrder = 7;

/// Every labeled connected graph on n vertices exactly once. Edges are
/// numbered (1,2), (1,3), .., (n-1,n) and edge sets visited in increasing
/// order of their bitmask over that numbering. Throws SizeLimitError for n > 7.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_connected_graphs(int n);

struct CnfFamily {
  int max_vars = 3;
  int max_clauses = 3;
  bool normalized_only = false;
  /// Clause widths admitted; 3..3 is plain 3-CNF over distinct variables.
  int min_width = 3;
  int max_width = 3;
};

inline constexpr int kMaxEnumeratedVars = 3;
inline constexpr int kMaxEnumeratedClauses = 4;

/// For each n = 1..max_vars, every set of 1..max_clauses distinct clauses
/// over x_1..x_n in which every x_i occurs (and, if normalized_only, occurs
/// with both polarities). Clause sets are emitted once each, in order of
/// size and then of clause indices. Throws SizeLimitError past 3 variables
/// or 4 clauses.
void for_each_small_cnf(const CnfFamily& family, const std::function<void(const CnfFormula&)>& fn);
std::vector<CnfFormula> enumerate_small_cnf(int max_vars, int max_clauses, bool normalized_only);

/// The eight clauses over x_1..x_3 with every sign pattern.
CnfFormula all_sign_patterns_formula();

struct SuiteConfig {
  int max_n = 4;        ///< graph order limit (graph suites)
  int max_k = 2;        ///< palette limit (st-to-global)
  int max_vars = 3;     ///< formula suites
  int max_clauses = 3;  ///< formula suites
  int min_width = 3;    ///< smallest clause width in formula suites
  bool fail_fast = false;
};

struct Mismatch {
  std::string instance;
  bool source = false;
  bool target = false;
  /// Empty for a plain verdict disagreement; otherwise names the failed side check.
  std::string detail;
};

struct SuiteReport {
  std::string reduction;
  long instances = 0;
  /// Instances whose witness was decoded or extended and re-verified.
  long witnesses_checked = 0;
  std::vector<Mismatch> mismatches;
  double elapsed_seconds = 0.0;

  bool passed() const noexcept { return mismatches.empty(); }
};

/// st-to-global, sat-to-st, subset-to-rvc2, diffpairs-to-subset,
/// sat-to-diffpairs and the composed sat-to-rvc2.
const std::vector<std::string>& reduction_names();

/// Family limits used when the caller gives none.
SuiteConfig default_suite_config(std::string_view name);

/// Runs the named family through both exact deciders and compares. Throws
/// InvalidInput for unknown names.
SuiteReport verify_reduction(std::string_view name, const SuiteConfig& config);
inline SuiteReport verify_reduction(std::string_view name) {
  return verify_reduction(name, default_suite_config(name));
}

/// Single-line description used in mismatch reports.
std::string describe(const Graph& g);
std::string describe(const CnfFormula& f);

}  // namespace rvc
