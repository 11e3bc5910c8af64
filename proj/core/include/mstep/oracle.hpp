#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mstep/bool_matrix.hpp"
#include "mstep/digraph.hpp"
#include "mstep/undirected_graph.hpp"

namespace mstep {

inline constexpr std::size_t kDefaultOracleSizeCap = 64;

struct SimulationOptions {
  std::size_t size_cap = kDefaultOracleSizeCap;
  std::size_t memory_cap = kDefaultMemoryCap;
};

/// Ground truth for {Γ(A^m)} obtained from the exact power cycle.
struct SimulationResult {
  PowerCycle cycle;
  bool converged = false;
  std::optional<UndirectedGraph> limit;  // Γ(A^index) when converged
  /// Γ(A^m) for m = index .. index + period - 1, in order.
  std::vector<UndirectedGraph> gamma_cycle;
};

SimulationResult simulate_limit(const BoolMatrix& a,
                                const SimulationOptions& options = {});

struct CheckOutcome {
  std::string name;  // "verdict", "limit" or "jbd"
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  bool passed = true;
  std::vector<CheckOutcome> checks;
  /// First failing check, with the input shrunk by greedy arc deletion
  /// while the digraph stays linearly connected and the check still fails.
  std::optional<std::string> failed_check;
  std::optional<Digraph> counterexample;
};

struct VerifyOptions {
  bool shrink = true;
  SimulationOptions simulation;
};

/// Deletes arcs one at a time, restarting after each success, as long as the
/// result stays linearly connected and `fails` still holds. Returns a
/// digraph from which no single arc can be removed this way.
Digraph shrink_counterexample(const Digraph& d,
                              const std::function<bool(const Digraph&)>& fails);

/// Compares the analytic verdict (and, for all-nontrivial chains, the limit
/// and the clique-union criterion) against simulate_limit.
VerifyReport verify(const Digraph& d, const VerifyOptions& options = {});

}  // namespace mstep
