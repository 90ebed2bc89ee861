#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rvc/cnf.hpp"
#include "rvc/coloring.hpp"

namespace rvc {

/// Maps the symbolic names of a gadget (s, t, x_{3}, alpha^1_{1,2}, ...) to
/// concrete vertex and color ids. Labels are ASCII: primes as ', bars as
/// "bar", superscripts after ^ and subscripts in braces after _.
///
/// Text form, one entry per line:
///
///   reduction <name>
///   role <label> <vertex>
///   color <label> <color>
///   occurrence <var> <positive> <negative>
///   formula <num_vars>
///   clause <dimacs literals...>
struct ReductionCertificate {
  std::string reduction;
  std::vector<std::pair<std::string, Vertex>> roles;
  std::vector<std::pair<std::string, Color>> colors;
  /// sat-to-st only; indexed by variable - 1.
  std::vector<OccurrenceCount> occurrences;
  /// Source formula for the SAT reductions, so decoders can self-check.
  std::optional<CnfFormula> formula;

  /// Throws InvalidInput for unknown labels.
  Vertex role(std::string_view label) const;
  Color color(std::string_view label) const;
  std::optional<Vertex> find_role(std::string_view label) const;
  /// Label naming v, if any.
  std::optional<std::string> label_of(Vertex v) const;

  /// Throws InvalidInput on repeated labels or ids.
  void validate() const;

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

std::string serialize_certificate(const ReductionCertificate& cert);
/// Throws ParseError.
ReductionCertificate parse_certificate(std::string_view text);

}  // namespace rvc
