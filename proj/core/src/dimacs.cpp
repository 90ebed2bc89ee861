#include <algorithm>
#include <sstream>

#include "rvc/cnf.hpp"
#include "rvc/errors.hpp"
#include "rvc/rvcg.hpp"

namespace rvc {

CnfFormula parse_dimacs(std::string_view text) {
  int num_vars = -1;
  int declared_clauses = -1;
  int last_line = 0;
  bool stopped = false;
  std::vector<Clause> clauses;
  Clause current;

  text::for_each_line(text, [&](int line, const std::vector<std::string_view>& tok) {
    last_line = line;
    if (stopped || tok[0] == "c" || tok[0].front() == 'c') return;
    if (tok[0] == "%") {  // SATLIB trailer
      stopped = true;
      return;
    }
    if (tok[0] == "p") {
      if (num_vars >= 0) throw ParseError(line, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "cnf") throw ParseError(line, "expected 'p cnf <vars> <clauses>'");
      num_vars = text::parse_int(tok[2], line);
      declared_clauses = text::parse_int(tok[3], line);
      if (num_vars < 0 || declared_clauses < 0) throw ParseError(line, "negative count in problem line");
      return;
    }
    if (num_vars < 0) throw ParseError(line, "clause before problem line");
    for (const auto token : tok) {
      const int lit = text::parse_int(token, line);
      if (lit == 0) {
        if (current.empty()) throw ParseError(line, "empty clause");
        Clause c = std::move(current);
        current.clear();
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.size() > 3) throw ParseError(line, "clause has more than 3 literals");
        for (std::size_t j = 1; j < c.size(); ++j) {
          if (c[j].var == c[j - 1].var) throw ParseError(line, "tautological clause");
        }
        clauses.push_back(std::move(c));
        continue;
      }
      const auto l = Literal::from_dimacs(lit);
      if (l.var > num_vars) {
        throw ParseError(line, "variable " + std::to_string(l.var) + " exceeds declared " + std::to_string(num_vars));
      }
      current.push_back(l);
    }
  });

  if (num_vars < 0) throw ParseError(last_line + 1, "missing problem line");
  if (!current.empty()) throw ParseError(last_line + 1, "last clause is not terminated by 0");
  if (static_cast<int>(clauses.size()) != declared_clauses) {
    throw ParseError(last_line + 1, "declared " + std::to_string(declared_clauses) + " clauses, found " +
                                        std::to_string(clauses.size()));
  }
  return CnfFormula(num_vars, std::move(clauses));
}

std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const auto& c : f.clauses()) {
    for (const auto& l : c) out << l.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace rvc
