#include "mstep/skeleton.hpp"

#include <numeric>

#include "mstep/error.hpp"

namespace mstep {

std::set<ClassPair> b_graph(std::size_t kappa1, std::size_t kappa2,
                            const InterfaceSet& interface,
                            bool first_trivial) {
  if (kappa1 == 0 || kappa2 == 0)
    throw PreconditionError("b_graph: indices of imprimitivity must be >= 1");
  if (first_trivial && kappa1 != 1)
    throw PreconditionError("b_graph: a trivial component has one class");
  for (const auto& [k, l] : interface.pairs)
    if (k >= kappa1 || l >= kappa2)
      throw PreconditionError("b_graph: interface pair out of range");

  std::set<ClassPair> edges;
  if (first_trivial) {
    for (const auto& [k, l] : interface.pairs)
      edges.emplace(0, (l + kappa2 - 1) % kappa2);
    return edges;
  }
  // The pattern in t repeats with period lcm(kappa1, kappa2).
  const std::size_t period = std::lcm(kappa1, kappa2);
  for (const auto& [k, l] : interface.pairs)
    for (std::size_t t = 0; t < period; ++t)
      edges.emplace((k + 1 + t) % kappa1, (l + t) % kappa2);
  return edges;
}

std::size_t SkeletonGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

SkeletonGraph cs_graph(const Digraph& d, const ComponentChain& chain,
                       const ImprimitivityData& imp) {
  if (!chain.all_nontrivial())
    throw TrivialComponentPresent(
        "the skeleton graph is defined only when every strong component has "
        "at least two vertices");
  SkeletonGraph sk;
  for (std::size_t p = 0; p < chain.eta(); ++p)
    sk.class_sizes.push_back(imp.kappa(p));
  for (std::size_t p = 0; p + 1 < chain.eta(); ++p)
    sk.levels.push_back(b_graph(imp.kappa(p), imp.kappa(p + 1),
                                interface_pairs(d, chain, imp, p), false));
  return sk;
}

AscendingReach ascending_reach(const SkeletonGraph& skeleton,
                               std::size_t level, std::size_t cls) {
  if (level >= skeleton.eta() || cls >= skeleton.class_sizes[level])
    throw PreconditionError("ascending_reach: class out of range");
  AscendingReach reach;
  reach.start = level;
  ResidueSet current(skeleton.class_sizes[level]);
  current.insert(static_cast<std::int64_t>(cls));
  reach.per_level.push_back(current);
  for (std::size_t r = level; r + 1 < skeleton.eta(); ++r) {
    ResidueSet next(skeleton.class_sizes[r + 1]);
    for (const auto& [i, j] : skeleton.levels[r])
      if (current.contains(static_cast<std::int64_t>(i)))
        next.insert(static_cast<std::int64_t>(j));
    reach.per_level.push_back(next);
    current = std::move(next);
  }
  return reach;
}

}  // namespace mstep
