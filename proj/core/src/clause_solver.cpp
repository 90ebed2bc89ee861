#include "clause_solver.hpp"

#include <algorithm>

namespace rvc::detail {

namespace {

// Luby sequence 1 1 2 1 1 2 4 ...
double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

constexpr int kNoReason = -1;
constexpr double kVarDecay = 0.95;
constexpr int kRestartBase = 100;

}  // namespace

int ClauseSolver::new_var() {
  const int v = num_vars();
  assigns_.push_back(0);
  level_.push_back(0);
  reason_.push_back(kNoReason);
  phase_.push_back(0);
  seen_.push_back(0);
  activity_.push_back(0.0);
  heap_index_.push_back(-1);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_insert(v);
  return v;
}

bool ClauseSolver::add_clause(std::vector<Lit> lits) {
  if (!ok_) return false;
  cancel_until(0);
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i + 1 < lits.size() && lits[i + 1] == negate(lits[i])) return true;  // tautology
    const auto v = value(lits[i]);
    if (v > 0) return true;
    if (v == 0) kept.push_back(lits[i]);
  }
  if (kept.empty()) return ok_ = false;
  if (kept.size() == 1) {
    enqueue(kept[0], kNoReason);
    return ok_ = propagate() < 0;
  }
  clauses_.push_back({std::move(kept)});
  attach(static_cast<int>(clauses_.size()) - 1);
  return true;
}

void ClauseSolver::attach(int ci) {
  const auto& c = clauses_[static_cast<std::size_t>(ci)].lits;
  watches_[static_cast<std::size_t>(negate(c[0]))].push_back(ci);
  watches_[static_cast<std::size_t>(negate(c[1]))].push_back(ci);
}

void ClauseSolver::enqueue(Lit l, int reason) {
  const auto v = static_cast<std::size_t>(lit_var(l));
  assigns_[v] = (l & 1) ? -1 : 1;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

int ClauseSolver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    const Lit false_lit = negate(p);
    auto& ws = watches_[static_cast<std::size_t>(p)];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      const int ci = ws[i++];
      auto& c = clauses_[static_cast<std::size_t>(ci)].lits;
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) > 0) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) >= 0) {
          std::swap(c[1], c[k]);
          watches_[static_cast<std::size_t>(negate(c[1]))].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = ci;
      if (value(c[0]) < 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return ci;
      }
      enqueue(c[0], ci);
    }
    ws.resize(j);
  }
  return kNoReason;
}

void ClauseSolver::analyze(int conflict, std::vector<Lit>& learnt, int& backtrack_level) {
  learnt.assign(1, 0);
  int pending = 0;
  Lit p = -1;
  auto index = static_cast<std::ptrdiff_t>(trail_.size()) - 1;
  int ci = conflict;
  do {
    const auto& c = clauses_[static_cast<std::size_t>(ci)].lits;
    for (std::size_t k = (p < 0 ? 0 : 1); k < c.size(); ++k) {
      const Lit q = c[k];
      const auto v = static_cast<std::size_t>(lit_var(q));
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump(static_cast<int>(v));
      if (level_[v] >= decision_level()) {
        ++pending;
      } else {
        learnt.push_back(q);
      }
    }
    while (!seen_[static_cast<std::size_t>(lit_var(trail_[static_cast<std::size_t>(index)]))]) --index;
    p = trail_[static_cast<std::size_t>(index)];
    --index;
    ci = reason_[static_cast<std::size_t>(lit_var(p))];
    seen_[static_cast<std::size_t>(lit_var(p))] = 0;
    --pending;
  } while (pending > 0);
  learnt[0] = negate(p);

  backtrack_level = 0;
  if (learnt.size() > 1) {
    std::size_t max_i = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k) {
      if (level_[static_cast<std::size_t>(lit_var(learnt[k]))] >
          level_[static_cast<std::size_t>(lit_var(learnt[max_i]))]) {
        max_i = k;
      }
    }
    std::swap(learnt[1], learnt[max_i]);
    backtrack_level = level_[static_cast<std::size_t>(lit_var(learnt[1]))];
  }
  for (const Lit q : learnt) seen_[static_cast<std::size_t>(lit_var(q))] = 0;
}

void ClauseSolver::cancel_until(int level) {
  if (decision_level() <= level) return;
  const auto stop = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(level)]);
  for (std::size_t i = trail_.size(); i-- > stop;) {
    const auto v = static_cast<std::size_t>(lit_var(trail_[i]));
    phase_[v] = assigns_[v] > 0;
    assigns_[v] = 0;
    reason_[v] = kNoReason;
    if (heap_index_[v] < 0) heap_insert(static_cast<int>(v));
  }
  trail_.resize(stop);
  trail_lim_.resize(static_cast<std::size_t>(level));
  qhead_ = trail_.size();
}

int ClauseSolver::pick_branch_var() {
  while (!heap_.empty()) {
    const int v = heap_pop();
    if (assigns_[static_cast<std::size_t>(v)] == 0) return v;
  }
  return -1;
}

bool ClauseSolver::solve(std::span<const Lit> assumptions) {
  if (!ok_) return false;
  cancel_until(0);
  int restarts = 0;
  std::uint64_t budget = static_cast<std::uint64_t>(luby(2, restarts) * kRestartBase);
  std::uint64_t since_restart = 0;
  std::vector<Lit> learnt;

  for (;;) {
    const int conflict = propagate();
    if (conflict >= 0) {
      ++conflicts_;
      ++since_restart;
      if (decision_level() == 0) return ok_ = false;
      int bt = 0;
      analyze(conflict, learnt, bt);
      cancel_until(bt);
      if (learnt.size() == 1) {
        enqueue(learnt[0], kNoReason);
      } else {
        clauses_.push_back({learnt});
        const int ci = static_cast<int>(clauses_.size()) - 1;
        attach(ci);
        enqueue(learnt[0], ci);
      }
      var_inc_ /= kVarDecay;
      continue;
    }

    if (since_restart >= budget) {
      since_restart = 0;
      budget = static_cast<std::uint64_t>(luby(2, ++restarts) * kRestartBase);
      cancel_until(0);
      continue;
    }

    Lit next = -1;
    while (decision_level() < static_cast<int>(assumptions.size())) {
      const Lit a = assumptions[static_cast<std::size_t>(decision_level())];
      const auto v = value(a);
      if (v > 0) {
        trail_lim_.push_back(static_cast<int>(trail_.size()));
      } else if (v < 0) {
        cancel_until(0);
        return false;
      } else {
        next = a;
        break;
      }
    }
    if (next < 0) {
      const int var = pick_branch_var();
      if (var < 0) {
        model_.assign(assigns_.size(), false);
        for (std::size_t i = 0; i < assigns_.size(); ++i) model_[i] = assigns_[i] > 0;
        cancel_until(0);
        return true;
      }
      next = phase_[static_cast<std::size_t>(var)] ? pos_lit(var) : neg_lit(var);
    }
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(next, kNoReason);
  }
}

void ClauseSolver::bump(int var) {
  auto& a = activity_[static_cast<std::size_t>(var)];
  if ((a += var_inc_) > 1e100) {
    for (auto& x : activity_) x *= 1e-100;
    var_inc_ *= 1e-100;
  }
  const int i = heap_index_[static_cast<std::size_t>(var)];
  if (i >= 0) heap_up(static_cast<std::size_t>(i));
}

void ClauseSolver::heap_insert(int var) {
  heap_index_[static_cast<std::size_t>(var)] = static_cast<int>(heap_.size());
  heap_.push_back(var);
  heap_up(heap_.size() - 1);
}

// Max-heap on activity; ties go to the lower variable index so that
// branching order is deterministic and follows vertex order initially.
void ClauseSolver::heap_up(std::size_t i) {
  const int var = heap_[i];
  auto better = [&](int a, int b) {
    const double x = activity_[static_cast<std::size_t>(a)], y = activity_[static_cast<std::size_t>(b)];
    return x > y || (x == y && a < b);
  };
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!better(var, heap_[parent])) break;
    heap_[i] = heap_[parent];
    heap_index_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
    i = parent;
  }
  heap_[i] = var;
  heap_index_[static_cast<std::size_t>(var)] = static_cast<int>(i);
}

void ClauseSolver::heap_down(std::size_t i) {
  const int var = heap_[i];
  auto better = [&](int a, int b) {
    const double x = activity_[static_cast<std::size_t>(a)], y = activity_[static_cast<std::size_t>(b)];
    return x > y || (x == y && a < b);
  };
  for (;;) {
    std::size_t child = 2 * i + 1;
    if (child >= heap_.size()) break;
    if (child + 1 < heap_.size() && better(heap_[child + 1], heap_[child])) ++child;
    if (!better(heap_[child], var)) break;
    heap_[i] = heap_[child];
    heap_index_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
    i = child;
  }
  heap_[i] = var;
  heap_index_[static_cast<std::size_t>(var)] = static_cast<int>(i);
}

int ClauseSolver::heap_pop() {
  const int top = heap_.front();
  heap_index_[static_cast<std::size_t>(top)] = -1;
  const int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_index_[static_cast<std::size_t>(last)] = 0;
    heap_down(0);
  }
  return top;
}

}  // namespace rvc::detail
