#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rvc/coloring.hpp"

namespace rvc {

// RVCG interchange format, line oriented, '#' starts a comment:
//
//   p rvcg <n> <m> <k>
//   e <u> <v>          exactly m lines
//   v <vertex> <color> exactly n lines when k > 0, none when k = 0
//
// All ids are decimal and 1-based.

/// Throws ParseError carrying the offending line number.
ColoredGraph parse_colored_graph(std::string_view text);

/// Canonical form: edges lexicographic with u < v, vertex lines in id order.
std::string serialize_colored_graph(const ColoredGraph& cg);

/// Plain graphs travel as RVCG with k = 0.
std::string serialize_graph(const Graph& g);

/// Reads `p <u> <v>` lines in file order (pair and pairing files).
std::vector<VertexPair> parse_pair_lines(std::string_view text);
std::string serialize_pair_lines(const std::vector<VertexPair>& pairs);

namespace text {

/// Splits one line into whitespace separated tokens, dropping any '#' comment.
std::vector<std::string_view> tokenize(std::string_view line);

/// Strict decimal integer; throws ParseError(line) otherwise.
int parse_int(std::string_view token, int line);

/// Calls fn(line_number, tokens) for every non-empty line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    ++line_no;
    auto tokens = tokenize(line);
    if (!tokens.empty()) fn(line_no, tokens);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

}  // namespace text
}  // namespace rvc
