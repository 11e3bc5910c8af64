#pragma once

#include <cstddef>
#include <optional>

#include "mstep/components.hpp"
#include "mstep/convergence.hpp"
#include "mstep/digraph.hpp"
#include "mstep/imprimitivity.hpp"
#include "mstep/undirected_graph.hpp"

namespace mstep {

/// Limit of {C(D^m)} for a linearly connected digraph whose strong
/// components all have at least two vertices: the expansion of the skeleton
/// graph with one clique per imprimitivity class.
///
/// x in class i of D_p and y in class j of D_q (p <= q, distinct classes)
/// are adjacent iff j is reachable from (p, i) at level q, or the ascending
/// reach sets of (p, i) and (q, j) meet at some level r > q.
///
/// Throws TrivialComponentPresent when some component is a single vertex.
UndirectedGraph limit_graph(const Digraph& d);
UndirectedGraph limit_graph(const Digraph& d, const ComponentChain& chain,
                            const ImprimitivityData& imp);

enum class JbdViolationKind { Divisibility, ResidueMismatch };

struct JbdViolation {
  std::size_t level = 0;  // p, 0-based
  JbdViolationKind kind = JbdViolationKind::Divisibility;
  ClassPair first{};      // reference pair (ResidueMismatch only)
  ClassPair offending{};  // pair whose residue differs (ResidueMismatch only)
};

struct JbdResult {
  bool holds = true;
  std::optional<JbdViolation> violation;  // first violating level
};

/// The limit is a disjoint union of cliques iff for every p < eta-1,
/// kappa_eta divides kappa_p and all pairs of I(D_p, D_{p+1}) share one
/// residue k - l mod kappa_eta. A single component always qualifies.
JbdResult jbd_condition(const Digraph& d, const ComponentChain& chain,
                        const ImprimitivityData& imp);

bool union_of_cliques(const UndirectedGraph& g);

}  // namespace mstep
