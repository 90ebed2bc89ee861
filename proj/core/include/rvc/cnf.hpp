#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rvc {

/// Variable id (1-based) with polarity. Orders by variable, positive first.
struct Literal {
  int var = 0;
  bool negated = false;

  int dimacs() const noexcept { return negated ? -var : var; }
  static Literal from_dimacs(int lit) noexcept { return lit < 0 ? Literal{-lit, true} : Literal{lit, false}; }
  Literal operator~() const noexcept { return {var, !negated}; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// 1 to 3 literals, sorted, no duplicates, never both x and not-x.
using Clause = std::vector<Literal>;

enum class TautologyPolicy { Reject, Drop };

/// 3-SAT instance with clauses of width 1..3 over variables 1..n.
class CnfFormula {
 public:
  CnfFormula() = default;

  /// Canonicalizes literal order and drops duplicate literals. Throws
  /// InvalidInput on empty or over-wide clauses, out-of-range variables and
  /// (under TautologyPolicy::Reject) clauses containing x and not-x.
  CnfFormula(int num_vars, std::vector<Clause> clauses, TautologyPolicy policy = TautologyPolicy::Reject);

  int num_vars() const noexcept { return num_vars_; }
  int num_clauses() const noexcept { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

/// Builds a formula from DIMACS-signed literals; convenient in tests.
CnfFormula make_formula(int num_vars, const std::vector<std::vector<int>>& clauses);

/// Total truth assignment over variables 1..n.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool operator[](int var) const { return values_.at(static_cast<std::size_t>(var) - 1); }
  const std::vector<bool>& values() const noexcept { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

/// Per-variable counts of clauses containing x_j (positive) and not-x_j (negative).
struct OccurrenceCount {
  int positive = 0;
  int negative = 0;
  friend bool operator==(const OccurrenceCount&, const OccurrenceCount&) = default;
};

/// Indexed by variable - 1.
std::vector<OccurrenceCount> occurrence_profile(const CnfFormula& f);

/// True when every occurring variable appears with both polarities.
bool is_two_sided(const CnfFormula& f);

/// True iff every clause has a literal satisfied by a. Throws InvalidInput
/// if a does not cover exactly the formula's variables.
bool evaluate(const CnfFormula& f, const Assignment& a);

enum class NormalizeStatus { Residual, SatisfiedByNormalization, UnsatisfiableByNormalization };

struct NormalizeResult {
  NormalizeStatus status = NormalizeStatus::Residual;
  /// Same variable numbering as the input; eliminated variables no longer occur.
  CnfFormula residual;
  /// Values fixed during elimination, indexed by variable - 1.
  std::vector<std::optional<bool>> forced;

  /// Merges the forced values into an assignment of the residual formula.
  /// Unforced variables missing from `residual_solution` default to false.
  Assignment complete(const std::optional<Assignment>& residual_solution = std::nullopt) const;
};

/// Unit propagation plus pure-literal elimination to a fixed point where every
/// surviving variable occurs with both polarities. Preserves satisfiability.
NormalizeResult normalize(const CnfFormula& f);

struct SatVerdict {
  bool sat = false;
  std::optional<Assignment> witness;
};

inline constexpr int kMaxBruteForceVars = 24;

/// Exhaustive over all 2^n assignments; the witness is the lexicographically
/// least satisfying assignment (x_1 most significant, false < true).
/// Throws SizeLimitError for n > kMaxBruteForceVars.
SatVerdict brute_force_sat(const CnfFormula& f);

/// DIMACS CNF restricted to clauses of width 1..3. Throws ParseError.
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

/// DIMACS-style solution line: "v 1 -2 3 0".
std::string format_assignment(const Assignment& a);

}  // namespace rvc
