#include "mstep/undirected_graph.hpp"

#include "mstep/error.hpp"

namespace mstep {

UndirectedGraph::UndirectedGraph(std::size_t n) : adjacency_(n) {}

UndirectedGraph UndirectedGraph::from_adjacency(const BoolMatrix& adjacency) {
  const std::size_t n = adjacency.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency.get(i, i))
      throw PreconditionError("adjacency matrix has a nonzero diagonal");
    for (std::size_t j = i + 1; j < n; ++j)
      if (adjacency.get(i, j) != adjacency.get(j, i))
        throw PreconditionError("adjacency matrix is not symmetric");
  }
  UndirectedGraph g(n);
  g.adjacency_ = adjacency;
  return g;
}

void UndirectedGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("undirected graphs have no loops");
  adjacency_.set(u, v);
  adjacency_.set(v, u);
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  return u < size() && v < size() && adjacency_.get(u, v);
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> result;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v = u + 1; v < size(); ++v)
      if (adjacency_.get(u, v)) result.emplace_back(u, v);
  return result;
}

std::size_t UndirectedGraph::edge_count() const {
  return adjacency_.popcount() / 2;
}

std::vector<Vertex> UndirectedGraph::neighbors(Vertex u) const {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < size(); ++v)
    if (adjacency_.get(u, v)) result.push_back(v);
  return result;
}

}  // namespace mstep
