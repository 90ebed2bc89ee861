#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rvc::detail {

/// Literal encoding: 2*var for the positive literal, 2*var+1 for its negation.
using Lit = int;

inline constexpr Lit pos_lit(int var) noexcept { return 2 * var; }
inline constexpr Lit neg_lit(int var) noexcept { return 2 * var + 1; }
inline constexpr int lit_var(Lit l) noexcept { return l >> 1; }
inline constexpr Lit negate(Lit l) noexcept { return l ^ 1; }

/// Small conflict-driven clause-learning engine: two watched literals,
/// first-UIP learning, activity-ordered branching with saved phases, Luby
/// restarts, incremental solving under assumptions. Branching defaults to the
/// negative phase. Sound and complete; no clause deletion, which is fine for
/// the desk-scale instances it serves.
class ClauseSolver {
 public:
  int new_var();
  int num_vars() const noexcept { return static_cast<int>(assigns_.size()); }

  /// Returns false once the clause set is known unsatisfiable.
  bool add_clause(std::vector<Lit> lits);

  /// True iff satisfiable with every assumption literal true.
  bool solve(std::span<const Lit> assumptions = {});

  /// Value of var in the most recent model.
  bool model_value(int var) const { return model_[static_cast<std::size_t>(var)]; }

  std::uint64_t conflicts() const noexcept { return conflicts_; }

 private:
  struct Clause {
    std::vector<Lit> lits;
  };

  std::int8_t value(Lit l) const noexcept {
    const auto a = assigns_[static_cast<std::size_t>(lit_var(l))];
    return (l & 1) ? static_cast<std::int8_t>(-a) : a;
  }
  int decision_level() const noexcept { return static_cast<int>(trail_lim_.size()); }

  void enqueue(Lit l, int reason);
  int propagate();
  void analyze(int conflict, std::vector<Lit>& learnt, int& backtrack_level);
  void cancel_until(int level);
  void attach(int clause_index);
  int pick_branch_var();

  void bump(int var);
  void heap_insert(int var);
  void heap_up(std::size_t i);
  void heap_down(std::size_t i);
  int heap_pop();

  bool ok_ = true;
  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;  // per literal
  std::vector<std::int8_t> assigns_;       // 1 true, -1 false, 0 unassigned
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<char> phase_;  // saved polarity, 1 = positive
  std::vector<char> seen_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<int> heap_;
  std::vector<int> heap_index_;  // -1 when absent

  std::vector<bool> model_;
  std::uint64_t conflicts_ = 0;
};

}  // namespace rvc::detail
