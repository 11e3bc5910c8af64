#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mstep/bool_matrix.hpp"
#include "mstep/digraph.hpp"

namespace mstep {

using Edge = std::pair<Vertex, Vertex>;

/// Loopless undirected graph backed by its symmetric adjacency matrix.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(std::size_t n);

  /// Throws PreconditionError unless `adjacency` is symmetric with a zero
  /// diagonal.
  static UndirectedGraph from_adjacency(const BoolMatrix& adjacency);

  std::size_t size() const noexcept { return adjacency_.size(); }

  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  /// Every edge once as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  std::vector<Vertex> neighbors(Vertex u) const;

  const BoolMatrix& adjacency() const noexcept { return adjacency_; }

  friend bool operator==(const UndirectedGraph&,
                         const UndirectedGraph&) = default;

 private:
  BoolMatrix adjacency_;
};

}  // namespace mstep
