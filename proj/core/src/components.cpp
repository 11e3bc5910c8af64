#include "mstep/components.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace mstep {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

std::string one_based(const Arc& a) {
  return std::to_string(a.from + 1) + "->" + std::to_string(a.to + 1);
}

}  // namespace

bool ComponentChain::all_trivial() const {
  return std::all_of(trivial.begin(), trivial.end(), [](bool t) { return t; });
}

bool ComponentChain::all_nontrivial() const {
  return std::none_of(trivial.begin(), trivial.end(), [](bool t) { return t; });
}

std::optional<std::size_t> ComponentChain::last_nontrivial() const {
  for (std::size_t p = trivial.size(); p-- > 0;)
    if (!trivial[p]) return p;
  return std::nullopt;
}

// Iterative Tarjan. Components are emitted sinks first, so the final
// reversal yields a topological order.
std::vector<std::vector<Vertex>> strong_components(const Digraph& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // vertex, next successor
  std::vector<std::vector<Vertex>> sccs;
  std::size_t counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto succ = d.out_neighbors(v);
      if (next < succ.size()) {
        const Vertex w = succ[next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      call.pop_back();
      if (!call.empty())
        low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<Vertex> scc;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          scc.push_back(w);
        } while (w != done);
        std::sort(scc.begin(), scc.end());
        sccs.push_back(std::move(scc));
      }
    }
  }
  std::reverse(sccs.begin(), sccs.end());
  return sccs;
}

ComponentChain component_chain(const Digraph& d) {
  for (const Arc& a : d.arcs())
    if (a.from == a.to)
      throw PreconditionError("self-loop at vertex " +
                              std::to_string(a.from + 1) +
                              " (digraphs must be simple)");

  ComponentChain chain;
  chain.components = strong_components(d);
  const std::size_t eta = chain.eta();
  chain.component_of.assign(d.size(), 0);
  for (std::size_t p = 0; p < eta; ++p)
    for (Vertex v : chain.components[p]) chain.component_of[v] = p;
  chain.trivial.resize(eta);
  for (std::size_t p = 0; p < eta; ++p)
    chain.trivial[p] = chain.components[p].size() == 1;

  chain.interface_arcs.assign(eta > 0 ? eta - 1 : 0, {});
  for (const Arc& a : d.arcs()) {
    const std::size_t cu = chain.component_of[a.from];
    const std::size_t cv = chain.component_of[a.to];
    if (cu == cv) continue;
    if (cv != cu + 1)
      throw NotLinearlyConnected(
          "arc " + one_based(a) + " joins strong components that are not "
          "consecutive in the chain",
          a);
    chain.interface_arcs[cu].push_back(a);
  }
  for (std::size_t p = 0; p + 1 < eta; ++p)
    if (chain.interface_arcs[p].empty())
      throw NotLinearlyConnected(
          "no arc from strong component " + std::to_string(p + 1) + " to " +
              std::to_string(p + 2) + "; the condensation is not a path",
          std::nullopt);
  return chain;
}

}  // namespace mstep
