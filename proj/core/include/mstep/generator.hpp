#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mstep/digraph.hpp"

namespace mstep {

/// Parameters for random linearly connected digraphs.
struct InstanceSpec {
  std::size_t eta = 1;
  std::size_t min_size = 2;
  std::size_t max_size = 5;
  /// Per component; missing entries count as false. A component allowed to
  /// be trivial becomes a single vertex with `trivial_probability` (always,
  /// when max_size == 1).
  std::vector<bool> allow_trivial;
  double trivial_probability = 0.5;
  /// Extra class-respecting arcs inside a component.
  double chord_probability = 0.3;
  /// Arbitrary extra arcs inside a component; these may lower kappa.
  double wild_chord_probability = 0.08;
  double interface_probability = 0.25;
  std::size_t max_vertices = 0;  // 0: unbounded
  std::uint64_t seed = 0;
};

/// Deterministic under `seed`. Each nontrivial component is a spanning
/// closed walk through planted cyclic classes plus random chords, so it is
/// strongly connected; consecutive components get at least one arc and no
/// arc skips a level. Vertex ids are shuffled. Throws PreconditionError for
/// infeasible specs.
Digraph random_instance(const InstanceSpec& spec);

}  // namespace mstep
