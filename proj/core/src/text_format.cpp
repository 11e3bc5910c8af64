#include "mstep/text_format.hpp"

#include <charconv>
#include <set>
#include <vector>

#include "mstep/error.hpp"

namespace mstep {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line,
                        const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected a decimal ") + what +
                               ", got \"" + std::string(token) + "\"");
  return value;
}

BoolMatrix parse_matrix_lines(const std::vector<std::string_view>& lines) {
  if (lines.empty()) throw ParseError(1, "empty input");
  const auto header = split_tokens(lines[0]);
  if (header.size() != 1)
    throw ParseError(1, "matrix header must be a single order n");
  const std::size_t n = parse_count(header[0], 1, "matrix order");
  if (n == 0) throw ParseError(1, "matrix order must be at least 1");
  if (lines.size() < n + 1)
    throw ParseError(lines.size() + 1, "expected " + std::to_string(n) +
                                           " matrix rows, found " +
                                           std::to_string(lines.size() - 1));
  if (lines.size() > n + 1)
    throw ParseError(n + 2, "unexpected content after the last matrix row");
  BoolMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view row = lines[i + 1];
    const std::size_t line_no = i + 2;
    if (row.size() != n)
      throw ParseError(line_no, "matrix row must have exactly " +
                                    std::to_string(n) + " characters, got " +
                                    std::to_string(row.size()));
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == '1')
        a.set(i, j);
      else if (row[j] != '0')
        throw ParseError(line_no, "matrix entries must be 0 or 1");
    }
  }
  return a;
}

Digraph parse_edge_list_lines(const std::vector<std::string_view>& lines) {
  if (lines.empty()) throw ParseError(1, "empty input");
  const auto header = split_tokens(lines[0]);
  if (header.size() != 2)
    throw ParseError(1, "edge-list header must be \"n m\"");
  const std::size_t n = parse_count(header[0], 1, "vertex count");
  const std::size_t m = parse_count(header[1], 1, "arc count");
  if (n == 0) throw ParseError(1, "vertex count must be at least 1");
  if (lines.size() < m + 1)
    throw ParseError(lines.size() + 1, "expected " + std::to_string(m) +
                                           " arcs, found " +
                                           std::to_string(lines.size() - 1));
  if (lines.size() > m + 1)
    throw ParseError(m + 2, "unexpected content after the last arc");
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t line_no = k + 2;
    const auto tokens = split_tokens(lines[k + 1]);
    if (tokens.size() != 2)
      throw ParseError(line_no, "arc line must be \"u v\"");
    const std::size_t u = parse_count(tokens[0], line_no, "vertex id");
    const std::size_t v = parse_count(tokens[1], line_no, "vertex id");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line_no, "vertex id out of range 1.." +
                                    std::to_string(n));
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u) +
                                    " (digraphs must be simple)");
    const Arc arc{u - 1, v - 1};
    if (!seen.insert(arc).second)
      throw ParseError(line_no, "duplicate arc " + std::to_string(u) + " " +
                                    std::to_string(v));
    arcs.push_back(arc);
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace

BoolMatrix parse_matrix(std::string_view text) {
  return parse_matrix_lines(split_lines(text));
}

std::string format_matrix(const BoolMatrix& a) {
  std::string out = std::to_string(a.size()) + "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out += a.get(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Digraph parse_edge_list(std::string_view text) {
  return parse_edge_list_lines(split_lines(text));
}

std::string format_edge_list(const Digraph& d) {
  std::string out =
      std::to_string(d.size()) + " " + std::to_string(d.arc_count()) + "\n";
  for (const Arc& a : d.arcs())
    out += std::to_string(a.from + 1) + " " + std::to_string(a.to + 1) + "\n";
  return out;
}

ParsedDigraph parse_digraph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  const auto header = split_tokens(lines[0]);
  if (header.size() == 2)
    return {parse_edge_list_lines(lines), InputFormat::EdgeList};
  if (header.size() != 1)
    throw ParseError(1, "first line must be \"n\" (matrix) or \"n m\" "
                        "(edge list)");
  const BoolMatrix a = parse_matrix_lines(lines);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.get(i, i))
      throw ParseError(i + 2, "self-loop at vertex " + std::to_string(i + 1) +
                                  " (digraphs must be simple)");
  return {from_matrix(a), InputFormat::Matrix};
}

}  // namespace mstep
