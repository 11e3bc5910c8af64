#pragma once

#include <cstddef>

#include "mstep/digraph.hpp"
#include "mstep/undirected_graph.hpp"

namespace mstep {

/// C(D): u ~ v iff u and v have a common out-neighbor.
UndirectedGraph competition_graph(const Digraph& d);

/// C^m(D) by a per-vertex frontier walk of exactly m steps over the
/// adjacency lists. Independent of the matrix kernel.
UndirectedGraph m_step_competition_by_walks(const Digraph& d, std::size_t m);

/// C^m(D) = C(D^m). Computed both as the competition graph of D(A^m) and by
/// m_step_competition_by_walks; throws InternalError if they disagree.
UndirectedGraph m_step_competition(const Digraph& d, std::size_t m);

}  // namespace mstep
