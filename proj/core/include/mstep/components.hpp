#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mstep/digraph.hpp"
#include "mstep/error.hpp"

namespace mstep {

/// The condensation is not a directed path whose arcs join consecutive
/// components only. `witness()` is an offending arc when one exists.
class NotLinearlyConnected : public Error {
 public:
  NotLinearlyConnected(const std::string& message, std::optional<Arc> witness)
      : Error(message), witness_(witness) {}

  const std::optional<Arc>& witness() const noexcept { return witness_; }

 private:
  std::optional<Arc> witness_;
};

/// Strong components D_1..D_eta of a linearly connected digraph, in chain
/// order. Indices into `components` are 0-based.
struct ComponentChain {
  std::vector<std::vector<Vertex>> components;  // each sorted ascending
  std::vector<bool> trivial;                    // singleton without a loop
  std::vector<std::vector<Arc>> interface_arcs; // [p]: arcs D_p -> D_{p+1}
  std::vector<std::size_t> component_of;        // per vertex

  std::size_t eta() const noexcept { return components.size(); }
  bool all_trivial() const;
  bool all_nontrivial() const;
  std::optional<std::size_t> last_nontrivial() const;
};

/// Strong components in a topological order of the condensation.
std::vector<std::vector<Vertex>> strong_components(const Digraph& d);

/// Throws NotLinearlyConnected for inputs outside the linear-chain class and
/// PreconditionError for digraphs with self-loops.
ComponentChain component_chain(const Digraph& d);

}  // namespace mstep
