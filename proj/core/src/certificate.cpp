#include "rvc/certificate.hpp"

#include <set>
#include <sstream>

#include "rvc/errors.hpp"
#include "rvc/rvcg.hpp"

namespace rvc {

std::optional<Vertex> ReductionCertificate::find_role(std::string_view label) const {
  for (const auto& [name, v] : roles) {
    if (name == label) return v;
  }
  return std::nullopt;
}

Vertex ReductionCertificate::role(std::string_view label) const {
  if (auto v = find_role(label)) return *v;
  throw InvalidInput("certificate has no role '" + std::string(label) + "'");
}

Color ReductionCertificate::color(std::string_view label) const {
  for (const auto& [name, c] : colors) {
    if (name == label) return c;
  }
  throw InvalidInput("certificate has no color '" + std::string(label) + "'");
}

std::optional<std::string> ReductionCertificate::label_of(Vertex v) const {
  for (const auto& [name, id] : roles) {
    if (id == v) return name;
  }
  return std::nullopt;
}

void ReductionCertificate::validate() const {
  std::set<std::string> labels;
  std::set<int> ids;
  for (const auto& [name, v] : roles) {
    if (!labels.insert(name).second) throw InvalidInput("certificate repeats role label '" + name + "'");
    if (!ids.insert(v).second) throw InvalidInput("certificate names vertex " + std::to_string(v) + " twice");
  }
  labels.clear();
  ids.clear();
  for (const auto& [name, c] : colors) {
    if (!labels.insert(name).second) throw InvalidInput("certificate repeats color label '" + name + "'");
    if (!ids.insert(c).second) throw InvalidInput("certificate names color " + std::to_string(c) + " twice");
  }
}

std::string serialize_certificate(const ReductionCertificate& cert) {
  std::ostringstream out;
  out << "reduction " << cert.reduction << '\n';
  for (const auto& [name, v] : cert.roles) out << "role " << name << ' ' << v << '\n';
  for (const auto& [name, c] : cert.colors) out << "color " << name << ' ' << c << '\n';
  for (std::size_t j = 0; j < cert.occurrences.size(); ++j) {
    out << "occurrence " << j + 1 << ' ' << cert.occurrences[j].positive << ' ' << cert.occurrences[j].negative
        << '\n';
  }
  if (cert.formula) {
    out << "formula " << cert.formula->num_vars() << '\n';
    for (const auto& clause : cert.formula->clauses()) {
      out << "clause";
      for (const auto& lit : clause) out << ' ' << lit.dimacs();
      out << '\n';
    }
  }
  return out.str();
}

ReductionCertificate parse_certificate(std::string_view text) {
  ReductionCertificate cert;
  std::optional<int> num_vars;
  std::vector<Clause> clauses;
  int formula_line = 0;

  text::for_each_line(text, [&](int line, const std::vector<std::string_view>& tok) {
    const auto key = tok[0];
    if (key == "reduction") {
      if (tok.size() != 2) throw ParseError(line, "expected 'reduction <name>'");
      if (!cert.reduction.empty()) throw ParseError(line, "second reduction line");
      cert.reduction = std::string(tok[1]);
    } else if (key == "role" || key == "color") {
      if (tok.size() != 3) throw ParseError(line, "expected '" + std::string(key) + " <label> <id>'");
      const int id = text::parse_int(tok[2], line);
      if (id < 1) throw ParseError(line, "ids are 1-based");
      auto& target = key == "role" ? cert.roles : cert.colors;
      target.emplace_back(std::string(tok[1]), id);
    } else if (key == "occurrence") {
      if (tok.size() != 4) throw ParseError(line, "expected 'occurrence <var> <positive> <negative>'");
      const int var = text::parse_int(tok[1], line);
      if (var != static_cast<int>(cert.occurrences.size()) + 1) throw ParseError(line, "occurrence lines out of order");
      cert.occurrences.push_back({text::parse_int(tok[2], line), text::parse_int(tok[3], line)});
    } else if (key == "formula") {
      if (tok.size() != 2) throw ParseError(line, "expected 'formula <num_vars>'");
      if (num_vars) throw ParseError(line, "second formula line");
      num_vars = text::parse_int(tok[1], line);
      formula_line = line;
    } else if (key == "clause") {
      if (!num_vars) throw ParseError(line, "clause before formula line");
      Clause c;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const int lit = text::parse_int(tok[i], line);
        if (lit == 0) throw ParseError(line, "literal 0");
        c.push_back(Literal::from_dimacs(lit));
      }
      clauses.push_back(std::move(c));
    } else {
      throw ParseError(line, "unknown certificate key '" + std::string(key) + "'");
    }
  });

  if (cert.reduction.empty()) throw ParseError(1, "missing reduction line");
  if (num_vars) {
    try {
      cert.formula = CnfFormula(*num_vars, std::move(clauses));
    } catch (const InvalidInput& e) {
      throw ParseError(formula_line, e.what());
    }
  }
  try {
    cert.validate();
  } catch (const InvalidInput& e) {
    throw ParseError(1, e.what());
  }
  return cert;
}

}  // namespace rvc
