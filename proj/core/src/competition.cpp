#include "mstep/competition.hpp"

#include <algorithm>
#include <vector>

#include "mstep/error.hpp"

namespace mstep {

namespace {

bool sorted_lists_meet(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

UndirectedGraph competition_graph(const Digraph& d) {
  UndirectedGraph g(d.size());
  for (Vertex u = 0; u < d.size(); ++u)
    for (Vertex v = u + 1; v < d.size(); ++v)
      if (sorted_lists_meet(d.out_neighbors(u), d.out_neighbors(v)))
        g.add_edge(u, v);
  return g;
}

UndirectedGraph m_step_competition_by_walks(const Digraph& d, std::size_t m) {
  if (m == 0) throw PreconditionError("m-step competition needs m >= 1");
  const std::size_t n = d.size();
  std::vector<std::vector<char>> prey(n);
  std::vector<char> next(n);
  for (Vertex u = 0; u < n; ++u) {
    std::vector<char> frontier(n, 0);
    frontier[u] = 1;
    for (std::size_t step = 0; step < m; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (Vertex x = 0; x < n; ++x)
        if (frontier[x])
          for (Vertex y : d.out_neighbors(x)) next[y] = 1;
      frontier.swap(next);
    }
    prey[u] = std::move(frontier);
  }
  UndirectedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex z = 0; z < n; ++z)
        if (prey[u][z] && prey[v][z]) {
          g.add_edge(u, v);
          break;
        }
  return g;
}

UndirectedGraph m_step_competition(const Digraph& d, std::size_t m) {
  if (m == 0) throw PreconditionError("m-step competition needs m >= 1");
  UndirectedGraph by_power =
      competition_graph(from_matrix(bool_pow(to_matrix(d), m)));
  if (by_power != m_step_competition_by_walks(d, m))
    throw InternalError("m-step competition: power and walk methods disagree");
  return by_power;
}

}  // namespace mstep
