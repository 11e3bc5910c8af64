#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "mstep/bool_matrix.hpp"

namespace mstep {

/// Vertex ids are 0-based in the library; text formats and reports use
/// 1-based ids.
using Vertex = std::size_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple digraph on vertices 0..n-1. Self-loops are representable (the
/// digraph of an arbitrary Boolean matrix may have them) but are reported by
/// has_self_loop() and rejected by the analysis entry points.
class Digraph {
 public:
  explicit Digraph(std::size_t n);
  /// Duplicate arcs collapse; out-of-range endpoints throw.
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t size() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  /// Sorted lexicographically.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex u) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;

  bool has_arc(Vertex u, Vertex v) const;
  bool has_self_loop() const;

  Digraph without_arc(const Arc& arc) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// D(A): arc (u,v) iff a(u,v) = 1.
Digraph from_matrix(const BoolMatrix& a);
BoolMatrix to_matrix(const Digraph& d);

}  // namespace mstep
