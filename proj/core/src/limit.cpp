#include "mstep/limit.hpp"

#include <deque>
#include <vector>

#include "mstep/error.hpp"
#include "mstep/skeleton.hpp"

namespace mstep {

UndirectedGraph limit_graph(const Digraph& d) {
  const ComponentChain chain = component_chain(d);
  return limit_graph(d, chain, imprimitivity(d, chain));
}

UndirectedGraph limit_graph(const Digraph& d, const ComponentChain& chain,
                            const ImprimitivityData& imp) {
  if (!chain.all_nontrivial())
    throw TrivialComponentPresent(
        "no analytic limit when a strong component is a single vertex; use "
        "the simulation oracle");
  const SkeletonGraph sk = cs_graph(d, chain, imp);
  const std::size_t eta = chain.eta();

  // Flatten (component, class) to one index and decide adjacency per class
  // pair; the limit is then the blow-up onto vertices.
  std::vector<std::size_t> offset(eta + 1, 0);
  for (std::size_t p = 0; p < eta; ++p) offset[p + 1] = offset[p] + imp.kappa(p);
  std::vector<AscendingReach> reach;
  reach.reserve(offset[eta]);
  for (std::size_t p = 0; p < eta; ++p)
    for (std::size_t i = 0; i < imp.kappa(p); ++i)
      reach.push_back(ascending_reach(sk, p, i));

  const std::size_t classes = offset[eta];
  std::vector<std::vector<bool>> adjacent(classes,
                                          std::vector<bool>(classes, false));
  for (std::size_t p = 0; p < eta; ++p)
    for (std::size_t i = 0; i < imp.kappa(p); ++i) {
      const std::size_t a = offset[p] + i;
      adjacent[a][a] = true;
      for (std::size_t q = p; q < eta; ++q)
        for (std::size_t j = (q == p ? i + 1 : 0); j < imp.kappa(q); ++j) {
          const std::size_t b = offset[q] + j;
          bool joined =
              q > p && reach[a].at(q).contains(static_cast<std::int64_t>(j));
          for (std::size_t r = q + 1; r < eta && !joined; ++r)
            joined = !(reach[a].at(r) & reach[b].at(r)).empty();
          adjacent[a][b] = adjacent[b][a] = joined;
        }
    }

  UndirectedGraph g(d.size());
  std::vector<std::size_t> flat(d.size());
  for (Vertex v = 0; v < d.size(); ++v)
    flat[v] = offset[chain.component_of[v]] + imp.class_of[v];
  for (Vertex x = 0; x < d.size(); ++x)
    for (Vertex y = x + 1; y < d.size(); ++y)
      if (adjacent[flat[x]][flat[y]]) g.add_edge(x, y);
  return g;
}

JbdResult jbd_condition(const Digraph& d, const ComponentChain& chain,
                        const ImprimitivityData& imp) {
  if (!chain.all_nontrivial())
    throw TrivialComponentPresent(
        "the clique-union criterion needs every strong component to have at "
        "least two vertices");
  JbdResult result;
  const std::size_t eta = chain.eta();
  if (eta == 1) return result;
  const std::size_t last = imp.kappa(eta - 1);
  auto residue = [last](const ClassPair& pair) {
    return (pair.first % last + last - pair.second % last) % last;
  };
  for (std::size_t p = 0; p + 1 < eta; ++p) {
    if (imp.kappa(p) % last != 0) {
      result.holds = false;
      result.violation = JbdViolation{p, JbdViolationKind::Divisibility, {}, {}};
      return result;
    }
    const InterfaceSet iface = interface_pairs(d, chain, imp, p);
    const ClassPair first = *iface.pairs.begin();
    for (const ClassPair& pair : iface.pairs)
      if (residue(pair) != residue(first)) {
        result.holds = false;
        result.violation =
            JbdViolation{p, JbdViolationKind::ResidueMismatch, first, pair};
        return result;
      }
  }
  return result;
}

bool union_of_cliques(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> component;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      component.push_back(u);
      for (Vertex v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
    }
    for (Vertex u : component)
      if (g.neighbors(u).size() != component.size() - 1) return false;
  }
  return true;
}

}  // namespace mstep
