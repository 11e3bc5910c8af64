#include "mstep/imprimitivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace mstep {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

ComponentClasses classes_of(const Digraph& d, const ComponentChain& chain,
                            std::size_t p, Vertex root,
                            std::vector<std::size_t>& class_of) {
  const auto& members = chain.components[p];
  ComponentClasses result;
  if (chain.trivial[p]) {
    result.classes = {members};
    class_of[members.front()] = 0;
    return result;
  }

  std::vector<std::size_t> level(d.size(), kUnreached);
  std::deque<Vertex> queue{root};
  level[root] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : d.out_neighbors(u)) {
      if (chain.component_of[v] != p || level[v] != kUnreached) continue;
      level[v] = level[u] + 1;
      queue.push_back(v);
    }
  }

  // BFS levels satisfy level(v) <= level(u) + 1 on every arc, so each term
  // is nonnegative.
  std::size_t kappa = 0;
  for (Vertex u : members) {
    if (level[u] == kUnreached)
      throw InternalError("strong component not reachable from its root");
    for (Vertex v : d.out_neighbors(u))
      if (chain.component_of[v] == p)
        kappa = std::gcd(kappa, level[u] + 1 - level[v]);
  }
  if (kappa == 0) throw InternalError("nontrivial component without a cycle");

  result.kappa = kappa;
  result.classes.assign(kappa, {});
  for (Vertex v : members) {
    class_of[v] = level[v] % kappa;
    result.classes[class_of[v]].push_back(v);
  }
  for (Vertex u : members)
    for (Vertex v : d.out_neighbors(u))
      if (chain.component_of[v] == p &&
          class_of[v] != (class_of[u] + 1) % kappa)
        throw InternalError("arc does not advance the imprimitivity class");
  return result;
}

}  // namespace

ImprimitivityData imprimitivity(const Digraph& d, const ComponentChain& chain) {
  std::vector<Vertex> roots;
  roots.reserve(chain.eta());
  for (const auto& members : chain.components) roots.push_back(members.front());
  return imprimitivity(d, chain, roots);
}

ImprimitivityData imprimitivity(const Digraph& d, const ComponentChain& chain,
                                std::span<const Vertex> roots) {
  if (roots.size() != chain.eta())
    throw PreconditionError("imprimitivity: need one root per component");
  ImprimitivityData data;
  data.class_of.assign(d.size(), 0);
  data.components.reserve(chain.eta());
  for (std::size_t p = 0; p < chain.eta(); ++p) {
    if (roots[p] >= d.size() || chain.component_of[roots[p]] != p)
      throw PreconditionError("imprimitivity: root " +
                              std::to_string(roots[p] + 1) +
                              " is not in component " + std::to_string(p + 1));
    data.components.push_back(classes_of(d, chain, p, roots[p], data.class_of));
  }
  return data;
}

}  // namespace mstep
