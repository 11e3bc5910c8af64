#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mstep/components.hpp"
#include "mstep/digraph.hpp"

namespace mstep {

/// Index of imprimitivity and cyclic classes U_0..U_{kappa-1} of one strong
/// component. Every arc inside the component goes from U_c to U_{c+1 mod
/// kappa}. Trivial components get kappa = 1 and a single class.
struct ComponentClasses {
  std::size_t kappa = 1;
  std::vector<std::vector<Vertex>> classes;  // each sorted ascending
};

struct ImprimitivityData {
  std::vector<ComponentClasses> components;  // indexed like the chain
  std::vector<std::size_t> class_of;         // per vertex, 0-based

  std::size_t kappa(std::size_t component) const {
    return components.at(component).kappa;
  }
  const std::vector<Vertex>& members(std::size_t component,
                                     std::size_t cls) const {
    return components.at(component).classes.at(cls);
  }
};

/// The smallest vertex id of each component lies in U_0.
ImprimitivityData imprimitivity(const Digraph& d, const ComponentChain& chain);

/// Same, but anchored at `roots[p]` for component p. Different roots only
/// rotate the class labels.
ImprimitivityData imprimitivity(const Digraph& d, const ComponentChain& chain,
                                std::span<const Vertex> roots);

}  // namespace mstep
