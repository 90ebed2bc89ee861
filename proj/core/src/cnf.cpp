#include "rvc/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "rvc/errors.hpp"

namespace rvc {

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses, TautologyPolicy policy)
    : num_vars_(num_vars) {
  if (num_vars < 0) throw InvalidInput("variable count must be nonnegative");
  clauses_.reserve(clauses.size());
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    Clause c = std::move(clauses[i]);
    for (const auto& lit : c) {
      if (lit.var < 1 || lit.var > num_vars) {
        throw InvalidInput("clause " + std::to_string(i + 1) + " mentions variable " + std::to_string(lit.var) +
                           " outside 1.." + std::to_string(num_vars));
      }
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty()) throw InvalidInput("clause " + std::to_string(i + 1) + " is empty");
    bool tautology = false;
    for (std::size_t j = 1; j < c.size(); ++j) tautology |= c[j].var == c[j - 1].var;
    if (tautology) {
      if (policy == TautologyPolicy::Drop) continue;
      throw InvalidInput("clause " + std::to_string(i + 1) + " is tautological");
    }
    if (c.size() > 3) {
      throw InvalidInput("clause " + std::to_string(i + 1) + " has " + std::to_string(c.size()) +
                         " literals; only 3-SAT is supported");
    }
    clauses_.push_back(std::move(c));
  }
}

CnfFormula make_formula(int num_vars, const std::vector<std::vector<int>>& clauses) {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (const auto& c : clauses) {
    Clause clause;
    for (int lit : c) clause.push_back(Literal::from_dimacs(lit));
    out.push_back(std::move(clause));
  }
  return CnfFormula(num_vars, std::move(out));
}

std::vector<OccurrenceCount> occurrence_profile(const CnfFormula& f) {
  std::vector<OccurrenceCount> profile(static_cast<std::size_t>(f.num_vars()));
  for (const auto& clause : f.clauses()) {
    for (const auto& lit : clause) {
      auto& slot = profile[static_cast<std::size_t>(lit.var) - 1];
      (lit.negated ? slot.negative : slot.positive) += 1;
    }
  }
  return profile;
}

bool is_two_sided(const CnfFormula& f) {
  const auto profile = occurrence_profile(f);
  return std::all_of(profile.begin(), profile.end(), [](const OccurrenceCount& o) {
    return (o.positive == 0) == (o.negative == 0);
  });
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  if (a.size() != f.num_vars()) {
    throw InvalidInput("assignment covers " + std::to_string(a.size()) + " variables, formula has " +
                       std::to_string(f.num_vars()));
  }
  return std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return a[l.var] != l.negated; });
  });
}

Assignment NormalizeResult::complete(const std::optional<Assignment>& residual_solution) const {
  std::vector<bool> values(forced.size(), false);
  for (std::size_t i = 0; i < forced.size(); ++i) {
    if (forced[i]) {
      values[i] = *forced[i];
    } else if (residual_solution && static_cast<int>(i) < residual_solution->size()) {
      values[i] = (*residual_solution)[static_cast<int>(i) + 1];
    }
  }
  return Assignment(std::move(values));
}

NormalizeResult normalize(const CnfFormula& f) {
  NormalizeResult result;
  result.forced.assign(static_cast<std::size_t>(f.num_vars()), std::nullopt);
  std::vector<Clause> clauses = f.clauses();

  // Fixes lit to true; false if some clause became empty.
  auto assign = [&](Literal lit) {
    result.forced[static_cast<std::size_t>(lit.var) - 1] = !lit.negated;
    std::vector<Clause> next;
    next.reserve(clauses.size());
    bool conflict = false;
    for (auto& c : clauses) {
      if (std::find(c.begin(), c.end(), lit) != c.end()) continue;
      std::erase(c, ~lit);
      conflict |= c.empty();
      next.push_back(std::move(c));
    }
    clauses = std::move(next);
    return !conflict;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      if (clauses[i].size() == 1) {
        const Literal unit = clauses[i][0];
        if (!assign(unit)) {
          result.status = NormalizeStatus::UnsatisfiableByNormalization;
          return result;
        }
        changed = true;
        break;
      }
    }
    if (changed) continue;

    const auto profile = occurrence_profile(CnfFormula(f.num_vars(), clauses));
    for (std::size_t v = 0; v < profile.size(); ++v) {
      const auto& o = profile[v];
      if ((o.positive == 0) == (o.negative == 0)) continue;
      assign(Literal{static_cast<int>(v) + 1, o.positive == 0});
      changed = true;
    }
  }

  result.residual = CnfFormula(f.num_vars(), clauses);
  result.status = clauses.empty() ? NormalizeStatus::SatisfiedByNormalization : NormalizeStatus::Residual;
  return result;
}

SatVerdict brute_force_sat(const CnfFormula& f) {
  const int n = f.num_vars();
  if (n > kMaxBruteForceVars) {
    throw SizeLimitError("brute_force_sat: " + std::to_string(n) + " variables exceeds limit " +
                         std::to_string(kMaxBruteForceVars));
  }
  // Bit (n - var) of the counter holds x_var so that counting up walks
  // assignments in lexicographic order with x_1 most significant.
  struct Masks {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
  };
  std::vector<Masks> masks;
  masks.reserve(f.clauses().size());
  for (const auto& c : f.clauses()) {
    Masks m;
    for (const auto& l : c) (l.negated ? m.neg : m.pos) |= std::uint32_t{1} << (n - l.var);
    masks.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const auto word = static_cast<std::uint32_t>(bits);
    const bool ok = std::all_of(masks.begin(), masks.end(), [word](const Masks& m) {
      return (word & m.pos) != 0 || (~word & m.neg) != 0;
    });
    if (ok) {
      std::vector<bool> values(static_cast<std::size_t>(n));
      for (int v = 1; v <= n; ++v) values[static_cast<std::size_t>(v) - 1] = (word >> (n - v)) & 1u;
      return {true, Assignment(std::move(values))};
    }
  }
  return {false, std::nullopt};
}

std::string format_assignment(const Assignment& a) {
  std::ostringstream out;
  out << 'v';
  for (int v = 1; v <= a.size(); ++v) out << ' ' << (a[v] ? v : -v);
  out << " 0\n";
  return out.str();
}

}  // namespace rvc
