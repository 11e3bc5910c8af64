#pragma once

#include <string>
#include <string_view>

#include "mstep/bool_matrix.hpp"
#include "mstep/digraph.hpp"

namespace mstep {

// Matrix format: line 1 is the decimal order n, then n lines of exactly n
// characters from {0,1}.
//
// Edge-list format: line 1 is "n m", then m lines "u v" with 1-based
// vertex ids separated by a single space.
//
// Both formats are newline-terminated; a trailing '\r' on a line and blank
// lines after the last record are tolerated on input.

BoolMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BoolMatrix& a);

/// Rejects self-loops and duplicate arcs.
Digraph parse_edge_list(std::string_view text);
std::string format_edge_list(const Digraph& d);

enum class InputFormat { Matrix, EdgeList };

struct ParsedDigraph {
  Digraph digraph;
  InputFormat format;
};

/// Auto-detects the format from the token count of line 1. Self-loops are
/// rejected in both formats.
ParsedDigraph parse_digraph(std::string_view text);

}  // namespace mstep
