#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// the word-parallel kernel or the analytic machinery.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mstep/bool_matrix.hpp"
#include "mstep/digraph.hpp"
#include "mstep/undirected_graph.hpp"

namespace mstep::testing {

BoolMatrix naive_mul(const BoolMatrix& a, const BoolMatrix& b);

/// powers[k] = A^(k+1), k < count, by repeated naive multiplication.
std::vector<BoolMatrix> naive_powers(const BoolMatrix& a, std::size_t count);

/// (index, period) by linear search over naive powers.
PowerCycle naive_power_cycle(const BoolMatrix& a);

BoolMatrix random_matrix(std::size_t n, double density, std::uint64_t seed);
Digraph random_digraph(std::size_t n, double density, std::uint64_t seed,
                       bool allow_loops);

/// gcd of closed-walk lengths <= |members| inside the induced subdigraph
/// (equal to gcd of cycle lengths).
std::size_t cycle_gcd(const Digraph& d, const std::vector<Vertex>& members);

/// Linear-chain acceptance by mutual reachability (transitive closure),
/// without any DFS-based component algorithm.
bool is_linearly_connected_brute(const Digraph& d);

/// Γ of a naive power, as a graph.
UndirectedGraph naive_gamma_graph(const BoolMatrix& a);

}  // namespace mstep::testing
