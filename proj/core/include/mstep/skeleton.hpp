#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "mstep/components.hpp"
#include "mstep/convergence.hpp"
#include "mstep/digraph.hpp"
#include "mstep/imprimitivity.hpp"
#include "mstep/residue_set.hpp"

namespace mstep {

/// Bipartite skeleton between consecutive components with indices kappa1
/// and kappa2. For a nontrivial first component, (i, j) is an edge iff
/// i = k+1+t (mod kappa1) and j = l+t (mod kappa2) for some (k, l) in I and
/// integer t; for a trivial first component (kappa1 = 1), (0, j) is an edge
/// iff j = l-1 (mod kappa2) for some (0, l) in I.
std::set<ClassPair> b_graph(std::size_t kappa1, std::size_t kappa2,
                            const InterfaceSet& interface, bool first_trivial);

/// eta-partite graph on the class indices of every component; level p holds
/// the skeleton between D_p and D_{p+1}.
struct SkeletonGraph {
  std::vector<std::size_t> class_sizes;
  std::vector<std::set<ClassPair>> levels;

  std::size_t eta() const noexcept { return class_sizes.size(); }
  std::size_t edge_count() const;
};

/// Requires every component to be nontrivial (TrivialComponentPresent).
SkeletonGraph cs_graph(const Digraph& d, const ComponentChain& chain,
                       const ImprimitivityData& imp);

/// Classes reachable from (start, cls) by skeleton paths advancing exactly
/// one level per step. at(start) == {cls}.
struct AscendingReach {
  std::size_t start = 0;
  std::vector<ResidueSet> per_level;  // per_level[r - start]

  const ResidueSet& at(std::size_t level) const {
    return per_level.at(level - start);
  }
};

AscendingReach ascending_reach(const SkeletonGraph& skeleton,
                               std::size_t level, std::size_t cls);

}  // namespace mstep
